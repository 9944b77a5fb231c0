#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liesym/group_algebra.hpp"
#include "liesym/matrix.hpp"

namespace liesym {

// Subspace of Q[S_n] (ambient dimension n!), represented by the canonical
// RREF basis over coordinates in enumerate_group order. Canonicality makes
// subspace equality plain matrix equality and output reproducible.
class Subspace {
public:
    static Subspace zero(int degree);
    static Subspace from_rref(int degree, Matrix rref_rows, std::vector<std::size_t> pivots);
    static Subspace from_vectors(int degree, const std::vector<std::vector<Rat>>& vectors);

    int degree() const { return degree_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // v minus its projection onto the row space; zero iff v is contained.
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    bool contains_vector(const std::vector<Rat>& v) const;

    // Coordinates of v in the RREF basis (read off the pivot columns), or
    // nullopt when v lies outside.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;

    // Adjoins v if independent, keeping the representation canonical RREF.
    // Returns true when the dimension grew.
    bool try_adjoin(std::vector<Rat> v);

    bool operator==(const Subspace& o) const {
        return degree_ == o.degree_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Subspace(int degree, Matrix basis, std::vector<std::size_t> pivots);

    int degree_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Coordinate bridges between sparse elements and dense ambient vectors.
std::vector<Rat> element_to_coords(const Element& x);
Element coords_to_element(int degree, const std::vector<Rat>& v);

bool contains(const Subspace& S, const Element& x);

} // namespace liesym
