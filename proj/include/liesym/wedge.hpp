#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liesym/group_algebra.hpp"
#include "liesym/matrix.hpp"
#include "liesym/perm.hpp"
#include "liesym/rational.hpp"

namespace liesym {

// Basis wedge x_{i_1} ^ ... ^ x_{i_m} of the m-th exterior power of Q^n,
// stored as the strictly increasing index sequence (empty for m = 0).
class WedgeIndex {
public:
    WedgeIndex(int n, std::vector<int> indices); // validates

    int n() const { return n_; }
    int m() const { return static_cast<int>(indices_.size()); }
    const std::vector<int>& indices() const { return indices_; }

    bool operator==(const WedgeIndex& o) const {
        return n_ == o.n_ && indices_ == o.indices_;
    }
    bool operator<(const WedgeIndex& o) const { return indices_ < o.indices_; }

private:
    int n_;
    std::vector<int> indices_;
};

// All C(n,m) increasing m-subsets in lexicographic order; fixes row/column
// indexing for every operator matrix.
std::vector<WedgeIndex> wedge_basis(int n, int m);

// Position of S within wedge_basis(S.n(), S.m()) without enumerating it
// (combinatorial number system).
std::size_t wedge_rank(const WedgeIndex& S);

std::size_t binomial(int n, int k);

// Antisymmetry bookkeeping: sorts a raw index tuple, returning the sign of
// the sorting permutation, or nullopt when an index repeats (the wedge is 0).
std::optional<std::pair<int, WedgeIndex>> sort_with_sign(int n, std::vector<int> raw);

// Sparse vector in the wedge basis.
using WedgeVector = std::map<WedgeIndex, Rat>;

// A_m(sigma): sigma applied to every factor. Always a single signed term.
// For m = 0 this is the scalar 1 (the empty wedge).
WedgeVector apply_a(const Permutation& sigma, const WedgeIndex& S);

// B_m(sigma): sigma applied to one factor at a time, summed over positions;
// replacements that collide with another factor drop out. B_0 = 0.
WedgeVector apply_b(const Permutation& sigma, const WedgeIndex& S);

enum class OperatorKind { A, B };

// The operator of x extended linearly from the group, as a C(n,m) x C(n,m)
// matrix over wedge_basis(n,m): column S_in holds the image of that wedge.
Matrix operator_matrix(const Element& x, int m, OperatorKind kind);

} // namespace liesym
