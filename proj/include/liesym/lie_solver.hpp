#pragma once

#include <vector>

#include "liesym/group_algebra.hpp"
#include "liesym/matrix.hpp"
#include "liesym/subspace.hpp"

namespace liesym {

// The defining linear system of the Lie-element space L_n: one row per
// (m, S_out, S_in) triple holding the (A_m - B_m)-coefficient, one column per
// permutation in enumerate_group order. x is a Lie element iff its coordinate
// vector lies in the nullspace. Row count is sum_m C(n,m)^2 = C(2n,n).
Matrix constraint_matrix(int n);

// Same system with the rows of one block m removed; exists to demonstrate
// that the m = 1 block is vacuous (A_1 = B_1 identically).
Matrix constraint_matrix_skipping(int n, int skipped_m);

// Canonical basis of L_n; cached per n for the life of the process
// (computed at most once, safe under concurrent use).
const Subspace& lie_basis(int n);

// Direct operator comparison A_m(x) = B_m(x) for every m = 0..n. Shares no
// code path with the nullspace solve, so it serves as the independent oracle.
bool is_lie_element(const Element& x);

// Smallest bracket-closed subspace containing the generators. Sweeps bracket
// all pairs of the current basis and adjoins what is new until the dimension
// stabilizes; the span of iterated brackets this produces is exactly the
// generated Lie subalgebra. Sweep count is reported for logging.
Subspace bracket_closure(int degree, const std::vector<Element>& generators,
                         int* sweeps_out = nullptr);

struct EmbeddingReport {
    int n = 0;
    int checked = 0;   // basis vectors of L_n examined
    bool all_pass = false;
};

// Pushes every basis vector of L_n through the standard embedding and
// re-verifies the Lie property one degree up.
EmbeddingReport verify_embedding(int n);

} // namespace liesym
