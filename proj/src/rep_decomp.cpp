#include "liesym/rep_decomp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "liesym/errors.hpp"
#include "liesym/group_algebra.hpp"
#include "liesym/guard.hpp"
#include "liesym/lie_solver.hpp"

namespace liesym {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        gen_partitions(remaining - part, part, stack, out);
        stack.pop_back();
    }
}

using Beta = std::vector<int>; // strictly decreasing first-column hook lengths

Beta beta_set(const std::vector<int>& lambda, int k) {
    Beta b(k);
    for (int i = 0; i < k; ++i) {
        const int part = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
        b[i] = part + (k - 1 - i);
    }
    return b;
}

std::vector<int> partition_from_beta(Beta b) {
    std::sort(b.rbegin(), b.rend());
    const int k = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) {
        const int part = b[i] - (k - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

// Murnaghan-Nakayama by border-strip removal on the beta-set (bead) model:
// removing a strip of length l moves one bead down l slots; its sign is
// (-1)^(beads jumped over). Memoized on (shape, remaining cycle parts).
struct MnEvaluator {
    std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;

    long long eval(const std::vector<int>& lambda, const std::vector<int>& mu) {
        if (mu.empty()) return 1; // lambda is empty too when weights agree
        const auto key = std::make_pair(lambda, mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const int l = mu.front();
        const std::vector<int> rest(mu.begin() + 1, mu.end());
        const int k = static_cast<int>(lambda.size());
        const Beta b = beta_set(lambda, k);

        long long total = 0;
        for (int i = 0; i < k; ++i) {
            const int target = b[i] - l;
            if (target < 0) continue;
            if (std::find(b.begin(), b.end(), target) != b.end()) continue;
            int height = 0;
            for (int x : b)
                if (target < x && x < b[i]) ++height;
            Beta moved = b;
            moved[i] = target;
            const long long sub = eval(partition_from_beta(std::move(moved)), rest);
            total += (height % 2 == 0) ? sub : -sub;
        }
        memo.emplace(key, total);
        return total;
    }
};

std::string render_frobenius(const DecompositionReport& rep) {
    std::ostringstream os;
    os << "R_" << rep.n << " = ";
    bool first = true;
    for (const auto& [lambda, mult] : rep.multiplicities) {
        if (!first) os << " + ";
        os << mult << "·s_" << lambda.to_string();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw DomainError("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(n, n, stack, out);
    // Recursion emits largest first parts first, which is exactly descending
    // lexicographic order; assert-free by construction.
    return out;
}

long long centralizer_order(const Partition& mu) {
    long long z = 1;
    const auto& parts = mu.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const long long mult = static_cast<long long>(j - i);
        for (long long t = 1; t <= mult; ++t) z *= parts[i] * t; // part^mult * mult!
        i = j;
    }
    return z;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
    if (n < 1) throw DomainError("conjugacy_classes requires n >= 1");
    const long long order = static_cast<long long>(factorial(n));
    std::vector<ConjugacyClass> out;
    for (const Partition& mu : partitions_of(n)) {
        std::vector<int> im(n);
        int base = 0;
        for (int part : mu.parts()) {
            for (int k = 0; k < part; ++k)
                im[base + k] = base + 1 + ((k + 1) % part);
            base += part;
        }
        out.push_back(ConjugacyClass{mu, order / centralizer_order(mu),
                                     Permutation(std::move(im))});
    }
    return out;
}

const CharacterTable& irreducible_characters(int n) {
    check_degree(n);
    static std::mutex mu_lock;
    static std::map<int, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mu_lock);
    auto it = cache.find(n);
    if (it == cache.end()) {
        CharacterTable table;
        MnEvaluator mn;
        const auto parts = partitions_of(n);
        for (const Partition& lambda : parts) {
            ClassFunction chi;
            chi.n = n;
            for (const Partition& mu : parts)
                chi.values.emplace(
                    mu, Rat(static_cast<long>(mn.eval(lambda.parts(), mu.parts()))));
            table.emplace(lambda, std::move(chi));
        }
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second;
}

long long character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw DomainError("character_value: partition weights differ");
    MnEvaluator mn;
    return mn.eval(lambda.parts(), mu.parts());
}

long long irreducible_dim(const Partition& lambda) {
    return character_value(lambda, Partition(std::vector<int>(lambda.weight(), 1)));
}

ClassFunction conjugation_character(const Subspace& S) {
    const int n = S.degree();
    ClassFunction chi;
    chi.n = n;
    std::vector<Element> basis_elems;
    basis_elems.reserve(S.dim());
    for (std::size_t i = 0; i < S.dim(); ++i)
        basis_elems.push_back(coords_to_element(n, S.basis().row(i)));
    for (const ConjugacyClass& cls : conjugacy_classes(n)) {
        Rat trace(0);
        for (std::size_t i = 0; i < basis_elems.size(); ++i) {
            const Element image = conjugate_element(cls.representative, basis_elems[i]);
            const auto coords = S.coordinates(element_to_coords(image));
            if (!coords)
                throw DomainError("subspace not conjugation-stable");
            trace += (*coords)[i];
        }
        chi.values.emplace(cls.cycle_type, std::move(trace));
    }
    return chi;
}

DecompositionReport multiplicities(const ClassFunction& chi) {
    const int n = chi.n;
    const auto classes = conjugacy_classes(n);
    const CharacterTable& table = irreducible_characters(n);
    const Rat order(static_cast<long>(factorial(n)));

    DecompositionReport rep;
    rep.n = n;
    for (const auto& [lambda, irr] : table) {
        Rat sum(0);
        for (const ConjugacyClass& cls : classes) {
            const Rat& chi_val = chi.values.at(cls.cycle_type);
            const Rat& irr_val = irr.values.at(cls.cycle_type);
            sum += Rat(static_cast<long>(cls.size)) * chi_val * irr_val;
        }
        sum /= order;
        if (!is_integer(sum) || sgn(sum) < 0)
            throw DomainError("input is not a genuine character: <chi, chi_" +
                              lambda.to_string() + "> = " + rat_string(sum));
        const long long a = sum.get_num().get_si();
        if (a > 0) {
            rep.multiplicities.emplace(lambda, a);
            rep.total_dim += a * irreducible_dim(lambda);
        }
    }
    return rep;
}

FrobeniusReport frobenius_report(int n) {
    check_degree(n);
    FrobeniusReport report;
    report.character = conjugation_character(lie_basis(n));
    report.decomp = multiplicities(report.character);
    report.rendered = render_frobenius(report.decomp);
    return report;
}

} // namespace liesym
