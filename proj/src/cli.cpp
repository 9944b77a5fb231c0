#include "liesym/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "liesym/conjecture.hpp"
#include "liesym/errors.hpp"
#include "liesym/guard.hpp"
#include "liesym/json_io.hpp"
#include "liesym/lie_solver.hpp"
#include "liesym/rep_decomp.hpp"
#include "liesym/verify.hpp"

namespace liesym::cli {

namespace {

// Routes primary output to --out when given, the provided stream otherwise.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw DomainError("cannot open output file \"" + path + "\"");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void print_element_lines(std::ostream& os, const Subspace& S) {
    for (std::size_t i = 0; i < S.dim(); ++i)
        os << "  " << format_element(coords_to_element(S.degree(), S.basis().row(i)))
           << "\n";
}

int run_basis(int n, const std::string& format, const std::string& out_path,
              std::ostream& out) {
    const Subspace& L = lie_basis(n);
    Sink sink(out_path, out);
    if (format == "json") {
        sink.stream() << basis_to_json(L).dump(2) << "\n";
    } else {
        sink.stream() << "n: " << n << "\n"
                      << "dim: " << L.dim() << "\n"
                      << "ordering: one-line lex\n"
                      << "basis:\n";
        print_element_lines(sink.stream(), L);
    }
    return kExitOk;
}

int run_verify(int n, const std::string& suite, std::uint64_t seed, int samples,
               std::ostream& out, std::ostream& err) {
    err << "seed: " << seed << "\n";
    std::vector<std::string> todo;
    if (suite == "all")
        todo = suite_names();
    else
        todo.push_back(suite);
    bool all_ok = true;
    for (const auto& name : todo) {
        const SuiteResult res = run_suite(name, n, seed, samples);
        if (res.passed) {
            out << "[ok]   " << res.name << " (" << res.checks << " checks)\n";
        } else {
            all_ok = false;
            out << "[FAIL] " << res.name << ": " << res.witness << "\n";
        }
    }
    return all_ok ? kExitOk : kExitClaimFailed;
}

int run_decompose(int n, const std::string& format, const std::string& out_path,
                  std::ostream& out) {
    const FrobeniusReport rep = frobenius_report(n);
    Sink sink(out_path, out);
    if (format == "json") {
        sink.stream() << decomposition_to_json(rep.character, rep.decomp).dump(2) << "\n";
    } else {
        sink.stream() << "n: " << n << "\n" << "character:\n";
        for (const auto& [mu, value] : rep.character.values)
            sink.stream() << "  " << mu.to_string() << ": " << rat_string(value) << "\n";
        sink.stream() << "multiplicities:\n";
        for (const auto& [lambda, a] : rep.decomp.multiplicities)
            sink.stream() << "  " << lambda.to_string() << ": " << a << "\n";
        sink.stream() << "dim: " << rep.decomp.total_dim << "\n"
                      << rep.rendered << "\n";
    }
    return kExitOk;
}

int run_generation(int n, const std::string& format, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
    const GenerationReport rep = check_generation(n);
    Sink sink(out_path, out);
    if (format == "json")
        sink.stream() << generation_to_json(rep).dump(2) << "\n";
    else
        sink.stream() << "n: " << rep.n << "\nclosure_dim: " << rep.closure_dim
                      << "\nlie_dim: " << rep.lie_dim
                      << "\nholds: " << (rep.holds ? "true" : "false")
                      << "\nsweeps: " << rep.sweeps << "\n";
    if (!rep.holds) {
        err << "witness: bracket closure of the nu_ij stops at dimension "
            << rep.closure_dim << " < " << rep.lie_dim << " = dim of the Lie space (n = "
            << rep.n << ")\n";
        return kExitClaimFailed;
    }
    return kExitOk;
}

int run_quotient(int n, Interpretation interp, const std::string& format,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
    const QuotientReport rep = quotient_report(n, interp);
    Sink sink(out_path, out);
    if (format == "json")
        sink.stream() << quotient_to_json(rep).dump(2) << "\n";
    else
        sink.stream() << "n: " << rep.n
                      << "\ninterpretation: " << interpretation_name(rep.interpretation)
                      << "\nlie_dim: " << rep.lie_dim << "\nkernel_dim: " << rep.kernel_dim
                      << "\nquotient_dim: " << rep.quotient_dim
                      << "\npredicted: " << rep.predicted
                      << "\nmatches: " << (rep.matches ? "true" : "false")
                      << "\ncommutator_count: " << rep.commutator_count
                      << "\ncommutator_rank_mod_kernel: " << rep.commutator_rank_mod_kernel
                      << "\ncommutators_form_basis: "
                      << (rep.commutators_form_basis ? "true" : "false") << "\n";
    if (!rep.matches) {
        err << "witness: quotient dimension " << rep.quotient_dim << " != (n-1)! = "
            << rep.predicted << " under the " << interpretation_name(interp)
            << " interpretation (n = " << rep.n
            << "); commutator family rank mod kernel is " << rep.commutator_rank_mod_kernel
            << " of " << rep.commutator_count << "\n";
        return kExitClaimFailed;
    }
    return kExitOk;
}

int run_table(int up_to, std::ostream& out) {
    out << std::left << std::setw(4) << "n" << std::setw(9) << "dim" << std::setw(16)
        << "closure (gen?)" << std::setw(22) << "perm q (kernel)" << std::setw(22)
        << "standard q (kernel)" << "exterior q (kernel)\n";
    for (int n = 1; n <= up_to; ++n) {
        const GenerationReport gen = check_generation(n);
        std::ostringstream closure;
        closure << gen.closure_dim << (gen.holds ? " (yes)" : " (NO)");
        out << std::left << std::setw(4) << n << std::setw(9) << gen.lie_dim
            << std::setw(16) << closure.str();
        for (const Interpretation interp :
             {Interpretation::perm, Interpretation::standard, Interpretation::exterior}) {
            const QuotientReport q = quotient_report(n, interp);
            std::ostringstream cell;
            cell << q.quotient_dim << " (" << q.kernel_dim << ")";
            if (interp != Interpretation::exterior)
                out << std::setw(22) << cell.str();
            else
                out << cell.str();
        }
        out << "\n";
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the Lie-element subspace of Q[S_n]", "liesym"};
    app.require_subcommand(1);

    int max_n = kDefaultMaxDegree;
    app.add_option("--max-n", max_n,
                   "session limit on n (default 6; 7 allowed but expensive)")
        ->envname("LIESYM_MAX_N");

    int n = 0;
    std::string format = "text", out_path, suite = "all", interp_name = "perm";
    std::uint64_t seed = 0;
    int samples = 50;
    int table_up_to = 0;

    auto* dim_cmd = app.add_subcommand("dim", "dimension of the Lie-element space");
    dim_cmd->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);

    auto* basis_cmd = app.add_subcommand("basis", "canonical basis, text or JSON");
    basis_cmd->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    basis_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    basis_cmd->add_option("--out", out_path, "write primary output to a file");

    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"transpositions", "homomorphism", "conjugation",
                               "embedding", "closure", "all"}));
    verify_cmd->add_option("--seed", seed, "seed for the randomized suites");
    verify_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);

    auto* decompose_cmd =
        app.add_subcommand("decompose", "conjugation character and multiplicities");
    decompose_cmd->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    decompose_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    decompose_cmd->add_option("--out", out_path, "write primary output to a file");

    auto* conj_cmd = app.add_subcommand("conjecture", "mechanical conjecture checkers");
    conj_cmd->require_subcommand(1);
    auto* gen_cmd = conj_cmd->add_subcommand("generation",
                                             "is the space generated by the 1 - (ij)?");
    gen_cmd->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    gen_cmd->add_option("--out", out_path, "write primary output to a file");
    auto* quot_cmd =
        conj_cmd->add_subcommand("quotient", "kernel and quotient of the n-point action");
    quot_cmd->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    quot_cmd->add_option("--interpretation", interp_name)
        ->required()
        ->check(CLI::IsMember({"perm", "standard", "exterior"}));
    quot_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    quot_cmd->add_option("--out", out_path, "write primary output to a file");

    auto* table_cmd = app.add_subcommand("table", "summary table over a range of n");
    table_cmd->add_option("--max-n", table_up_to, "largest n to tabulate")
        ->required()
        ->check(CLI::PositiveNumber);

    for (auto* sub : {dim_cmd, basis_cmd, verify_cmd, decompose_cmd, conj_cmd, table_cmd})
        sub->fallthrough(); // lets a trailing session --max-n reach the app
    gen_cmd->fallthrough();
    quot_cmd->fallthrough();

    // conjecture reports default to JSON; everything else to text
    bool format_given = false;
    for (const auto& a : args)
        if (a.rfind("--format", 0) == 0) format_given = true;

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (max_n < 1) {
            err << "error: --max-n must be at least 1\n";
            return kExitUsage;
        }
        if (max_n > kHardMaxDegree) {
            err << "error: n beyond " << kHardMaxDegree
                << " is not supported (the exact elimination would be enormous)\n";
            return kExitGuard;
        }
        if (max_n == kHardMaxDegree)
            err << "warning: n = 7 solves a 3432 x 5040 exact system; expect minutes\n";
        set_max_degree(max_n);

        if (dim_cmd->parsed()) {
            out << lie_basis(n).dim() << "\n";
            return kExitOk;
        }
        if (basis_cmd->parsed()) return run_basis(n, format, out_path, out);
        if (verify_cmd->parsed()) return run_verify(n, suite, seed, samples, out, err);
        if (decompose_cmd->parsed()) return run_decompose(n, format, out_path, out);
        if (conj_cmd->parsed()) {
            if (!format_given) format = "json";
            if (gen_cmd->parsed()) return run_generation(n, format, out_path, out, err);
            return run_quotient(n, interpretation_from_name(interp_name), format, out_path,
                                out, err);
        }
        if (table_cmd->parsed()) {
            check_degree(table_up_to); // the table walks up to this n
            return run_table(table_up_to, out);
        }
        err << "error: no subcommand selected\n" << app.help();
        return kExitUsage;
    } catch (const ResourceGuardError& e) {
        err << "resource guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace liesym::cli
