#include "liesym/lie_solver.hpp"

#include <map>
#include <mutex>

#include "liesym/errors.hpp"
#include "liesym/guard.hpp"
#include "liesym/wedge.hpp"

namespace liesym {

namespace {

Matrix build_constraint(int n, int skipped_m) {
    check_degree(n);
    std::size_t rows = 0;
    for (int m = 0; m <= n; ++m) {
        if (m == skipped_m) continue;
        const std::size_t c = binomial(n, m);
        rows += c * c;
    }
    const auto perms = enumerate_group(n);
    Matrix M(rows, perms.size());

    std::size_t offset = 0;
    for (int m = 0; m <= n; ++m) {
        if (m == skipped_m) continue;
        const auto basis = wedge_basis(n, m);
        const std::size_t c = basis.size();
        for (std::size_t col = 0; col < perms.size(); ++col) {
            const Permutation& sigma = perms[col];
            for (std::size_t b = 0; b < c; ++b) {
                // Row (m, S_out, S_in) gets the S_out-coefficient of
                // (A_m - B_m)(sigma) applied to wedge S_in.
                for (const auto& [T, coeff] : apply_a(sigma, basis[b]))
                    M.at(offset + wedge_rank(T) * c + b, col) += coeff;
                for (const auto& [T, coeff] : apply_b(sigma, basis[b]))
                    M.at(offset + wedge_rank(T) * c + b, col) -= coeff;
            }
        }
        offset += c * c;
    }
    return M;
}

} // namespace

Matrix constraint_matrix(int n) { return build_constraint(n, -1); }

Matrix constraint_matrix_skipping(int n, int skipped_m) {
    if (skipped_m < 0 || skipped_m > n) throw DomainError("skipped block out of range");
    return build_constraint(n, skipped_m);
}

const Subspace& lie_basis(int n) {
    check_degree(n);
    static std::mutex mu;
    static std::map<int, Subspace> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        Matrix ns = nullspace(constraint_matrix(n));
        auto red = rref(ns); // already canonical; recompute pivots cheaply
        it = cache.emplace(n, Subspace::from_rref(n, std::move(red.reduced),
                                                  std::move(red.pivot_cols)))
                 .first;
    }
    return it->second;
}

bool is_lie_element(const Element& x) {
    for (int m = 0; m <= x.degree(); ++m) {
        if (operator_matrix(x, m, OperatorKind::A) != operator_matrix(x, m, OperatorKind::B))
            return false;
    }
    return true;
}

Subspace bracket_closure(int degree, const std::vector<Element>& generators,
                         int* sweeps_out) {
    Subspace span = Subspace::zero(degree);
    for (const auto& g : generators) {
        if (g.degree() != degree)
            throw DegreeMismatchError("bracket_closure: generator degree mismatch");
        span.try_adjoin(element_to_coords(g));
    }
    int sweeps = 0;
    bool grew = span.dim() > 0;
    while (grew) {
        grew = false;
        ++sweeps;
        // Bracket all pairs from a snapshot of the current basis; vectors
        // adjoined mid-sweep take part from the next sweep on. Antisymmetry
        // makes the (j, i) and (i, i) brackets redundant.
        std::vector<Element> snapshot;
        snapshot.reserve(span.dim());
        for (std::size_t i = 0; i < span.dim(); ++i)
            snapshot.push_back(coords_to_element(degree, span.basis().row(i)));
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                Element br = bracket(snapshot[i], snapshot[j]);
                if (br.is_zero()) continue;
                if (span.try_adjoin(element_to_coords(br))) grew = true;
            }
    }
    if (sweeps_out) *sweeps_out = sweeps;
    return span;
}

EmbeddingReport verify_embedding(int n) {
    check_degree(n);
    check_degree(n + 1); // the embedded elements live one degree up
    EmbeddingReport report;
    report.n = n;
    report.all_pass = true;
    const Subspace& L = lie_basis(n);
    for (std::size_t i = 0; i < L.dim(); ++i) {
        const Element u = coords_to_element(n, L.basis().row(i));
        ++report.checked;
        if (!is_lie_element(embed_element(u))) {
            report.all_pass = false;
            return report;
        }
    }
    return report;
}

} // namespace liesym
