#include "liesym/subspace.hpp"

#include <algorithm>

#include "liesym/errors.hpp"

namespace liesym {

Subspace::Subspace(int degree, Matrix basis, std::vector<std::size_t> pivots)
    : degree_(degree), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(int degree) {
    if (degree < 1) throw DomainError("subspace degree must be positive");
    return Subspace(degree, Matrix(0, factorial(degree)), {});
}

Subspace Subspace::from_rref(int degree, Matrix rref_rows, std::vector<std::size_t> pivots) {
    if (rref_rows.cols() != factorial(degree))
        throw DomainError("subspace ambient dimension must be degree!");
    if (rref_rows.rows() != pivots.size())
        throw DomainError("one pivot per basis row required");
    return Subspace(degree, std::move(rref_rows), std::move(pivots));
}

Subspace Subspace::from_vectors(int degree, const std::vector<std::vector<Rat>>& vectors) {
    const std::size_t ambient = factorial(degree);
    Matrix stack(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient)
            throw DomainError("vector length must be degree!");
        for (std::size_t j = 0; j < ambient; ++j) stack.at(i, j) = vectors[i][j];
    }
    auto red = rref(stack);
    return Subspace(degree, std::move(red.reduced), std::move(red.pivot_cols));
}

std::vector<Rat> Subspace::reduce(std::vector<Rat> v) const {
    if (v.size() != ambient_dim()) throw DomainError("vector length must be degree!");
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rat c = v[pivots_[i]];
        if (sgn(c) == 0) continue;
        for (std::size_t j = pivots_[i]; j < v.size(); ++j) {
            const Rat& src = basis_.at(i, j);
            if (sgn(src) != 0) v[j] -= c * src;
        }
    }
    return v;
}

bool Subspace::contains_vector(const std::vector<Rat>& v) const {
    const auto residual = reduce(v);
    return std::all_of(residual.begin(), residual.end(),
                       [](const Rat& r) { return sgn(r) == 0; });
}

std::optional<std::vector<Rat>> Subspace::coordinates(const std::vector<Rat>& v) const {
    // In RREF coordinates the coefficient of basis row i is just the entry of
    // v at that row's pivot column -- provided v lies in the span at all.
    if (!contains_vector(v)) return std::nullopt;
    std::vector<Rat> coords(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) coords[i] = v[pivots_[i]];
    return coords;
}

bool Subspace::try_adjoin(std::vector<Rat> v) {
    v = reduce(std::move(v));
    std::size_t lead = v.size();
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (sgn(v[j]) != 0) {
            lead = j;
            break;
        }
    }
    if (lead == v.size()) return false;

    const Rat inv = Rat(1) / v[lead];
    if (inv != 1)
        for (std::size_t j = lead; j < v.size(); ++j)
            if (sgn(v[j]) != 0) v[j] *= inv;

    // Back-eliminate the new pivot column from the existing rows, then insert
    // the row in pivot order so the matrix stays canonical RREF.
    const std::size_t insert_at =
        static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), lead) -
                                 pivots_.begin());
    Matrix next(basis_.rows() + 1, basis_.cols());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const std::size_t dst = i < insert_at ? i : i + 1;
        const Rat f = basis_.at(i, lead);
        for (std::size_t j = 0; j < basis_.cols(); ++j) {
            next.at(dst, j) = basis_.at(i, j);
            if (sgn(f) != 0 && sgn(v[j]) != 0) next.at(dst, j) -= f * v[j];
        }
    }
    for (std::size_t j = 0; j < basis_.cols(); ++j) next.at(insert_at, j) = v[j];
    basis_ = std::move(next);
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(insert_at), lead);
    return true;
}

std::vector<Rat> element_to_coords(const Element& x) {
    std::vector<Rat> v(factorial(x.degree()), Rat(0));
    for (const auto& [p, c] : x.terms()) v[lex_rank(p)] = c;
    return v;
}

Element coords_to_element(int degree, const std::vector<Rat>& v) {
    if (v.size() != factorial(degree))
        throw DomainError("coordinate vector length must be degree!");
    Element out(degree);
    for (std::size_t r = 0; r < v.size(); ++r)
        if (sgn(v[r]) != 0) out.add(lex_unrank(degree, r), v[r]);
    return out;
}

bool contains(const Subspace& S, const Element& x) {
    if (S.degree() != x.degree())
        throw DegreeMismatchError("contains: subspace and element degrees differ");
    return S.contains_vector(element_to_coords(x));
}

} // namespace liesym
