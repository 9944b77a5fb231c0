#include "liesym/conjecture.hpp"

#include "liesym/errors.hpp"
#include "liesym/guard.hpp"
#include "liesym/lie_solver.hpp"
#include "liesym/wedge.hpp"

namespace liesym {

std::string interpretation_name(Interpretation it) {
    switch (it) {
        case Interpretation::perm: return "perm";
        case Interpretation::standard: return "standard";
        case Interpretation::exterior: return "exterior";
    }
    throw DomainError("unknown interpretation");
}

Interpretation interpretation_from_name(const std::string& name) {
    if (name == "perm") return Interpretation::perm;
    if (name == "standard") return Interpretation::standard;
    if (name == "exterior") return Interpretation::exterior;
    throw DomainError("unknown interpretation \"" + name + "\"");
}

GenerationReport check_generation(int n) {
    check_degree(n);
    GenerationReport rep;
    rep.n = n;
    std::vector<Element> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            gens.push_back(transposition_unit(i, j, n));
    const Subspace closure = bracket_closure(n, gens, &rep.sweeps);
    rep.closure_dim = static_cast<long long>(closure.dim());
    rep.lie_dim = static_cast<long long>(lie_basis(n).dim());
    rep.holds = rep.closure_dim == rep.lie_dim;
    return rep;
}

Matrix action_matrix(const Element& x, Interpretation interp) {
    const int n = x.degree();
    switch (interp) {
        case Interpretation::perm:
            return operator_matrix(x, 1, OperatorKind::A);
        case Interpretation::standard: {
            // Restrict A_1(x) to the complement of the all-ones vector in the
            // basis {x_1 - x_n, ..., x_{n-1} - x_n}. The image of x_j - x_n
            // has coefficients c_row = full(row, j) - full(row, n-1), which
            // always sum to zero (every column of A_1(x) sums to the
            // coefficient sum of x), so the first n-1 of them are already the
            // coordinates in the difference basis.
            const Matrix full = operator_matrix(x, 1, OperatorKind::A);
            if (n == 1) return Matrix(0, 0);
            Matrix out(n - 1, n - 1);
            for (int col = 0; col < n - 1; ++col)
                for (int row = 0; row < n - 1; ++row)
                    out.at(row, col) = full.at(row, col) - full.at(row, n - 1);
            return out;
        }
        case Interpretation::exterior: {
            std::size_t size = 0;
            for (int m = 0; m <= n; ++m) size += binomial(n, m);
            Matrix out(size, size);
            std::size_t off = 0;
            for (int m = 0; m <= n; ++m) {
                const Matrix block = operator_matrix(x, m, OperatorKind::A);
                for (std::size_t i = 0; i < block.rows(); ++i)
                    for (std::size_t j = 0; j < block.cols(); ++j)
                        out.at(off + i, off + j) = block.at(i, j);
                off += block.rows();
            }
            return out;
        }
    }
    throw DomainError("unknown interpretation");
}

namespace {

std::vector<Rat> flatten(const Matrix& m) {
    std::vector<Rat> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.push_back(m.at(i, j));
    return out;
}

} // namespace

Subspace action_kernel(int n, Interpretation interp) {
    check_degree(n);
    const Subspace& L = lie_basis(n);
    if (L.dim() == 0) return Subspace::zero(n);

    // Rows of F are the flattened action matrices of the basis vectors; a
    // combination sum c_i u_i acts as zero exactly when c is in the nullspace
    // of F^T. Those combinations are then pulled back to Q[S_n] coordinates.
    std::vector<std::vector<Rat>> flat;
    flat.reserve(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
        const Element u = coords_to_element(n, L.basis().row(i));
        flat.push_back(flatten(action_matrix(u, interp)));
    }
    const std::size_t flat_size = flat.front().size();
    Matrix ft(flat_size, L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < flat_size; ++j)
            ft.at(j, i) = flat[i][j];

    const Matrix combos = nullspace(ft); // rows: coefficients over L's basis
    std::vector<std::vector<Rat>> kernel_vectors;
    kernel_vectors.reserve(combos.rows());
    for (std::size_t r = 0; r < combos.rows(); ++r) {
        std::vector<Rat> v(L.ambient_dim(), Rat(0));
        for (std::size_t i = 0; i < L.dim(); ++i) {
            const Rat& c = combos.at(r, i);
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < L.ambient_dim(); ++j) {
                const Rat& b = L.basis().at(i, j);
                if (sgn(b) != 0) v[j] += c * b;
            }
        }
        kernel_vectors.push_back(std::move(v));
    }
    return Subspace::from_vectors(n, kernel_vectors);
}

std::vector<Element> commutator_family(int n) {
    if (n < 2) throw DomainError("commutator_family requires n >= 2");
    // Indices (i_1, ..., i_{n-1}) with s+1 <= i_s <= n, in lexicographic
    // order; each gives the left-nested [...[nu_{1 i_1}, nu_{2 i_2}], ...].
    std::vector<Element> out;
    std::vector<int> idx(n - 1);
    for (int s = 0; s < n - 1; ++s) idx[s] = s + 2;
    while (true) {
        Element acc = transposition_unit(1, idx[0], n);
        for (int s = 1; s < n - 1; ++s)
            acc = bracket(acc, transposition_unit(s + 1, idx[s], n));
        out.push_back(std::move(acc));
        int s = n - 2;
        while (s >= 0 && idx[s] == n) --s;
        if (s < 0) break;
        ++idx[s];
        for (int t = s + 1; t < n - 1; ++t) idx[t] = t + 2;
    }
    return out;
}

QuotientReport quotient_report(int n, Interpretation interp) {
    check_degree(n);
    QuotientReport rep;
    rep.n = n;
    rep.interpretation = interp;
    const Subspace& L = lie_basis(n);
    const Subspace kernel = action_kernel(n, interp);
    rep.lie_dim = static_cast<long long>(L.dim());
    rep.kernel_dim = static_cast<long long>(kernel.dim());
    rep.quotient_dim = rep.lie_dim - rep.kernel_dim;
    rep.predicted = static_cast<long long>(factorial(n - 1));
    rep.matches = rep.quotient_dim == rep.predicted;

    if (n >= 2) {
        const auto family = commutator_family(n);
        rep.commutator_count = static_cast<long long>(family.size());
        // Rank of the family modulo the kernel: adjoin each commutator to a
        // copy of the kernel subspace and count the dimension jumps.
        Subspace mod = kernel;
        long long rank = 0;
        for (const Element& w : family)
            if (mod.try_adjoin(element_to_coords(w))) ++rank;
        rep.commutator_rank_mod_kernel = rank;
    }
    rep.commutators_form_basis = rep.commutator_rank_mod_kernel == rep.quotient_dim &&
                                 rep.quotient_dim == rep.commutator_count;
    return rep;
}

} // namespace liesym
