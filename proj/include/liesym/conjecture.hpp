#pragma once

#include <string>
#include <vector>

#include "liesym/group_algebra.hpp"
#include "liesym/matrix.hpp"
#include "liesym/subspace.hpp"

namespace liesym {

// How "the action of L_n on C^n" is read. The source statement admits more
// than one reading, so all three are computed and reported side by side:
//   perm     - the full n-dimensional permutation module (A_1),
//   standard - its (n-1)-dimensional complement of the all-ones vector,
//              in the basis {x_1 - x_n, ..., x_{n-1} - x_n},
//   exterior - the direct sum of all exterior powers m = 0..n.
enum class Interpretation { perm, standard, exterior };

std::string interpretation_name(Interpretation it);
Interpretation interpretation_from_name(const std::string& name);

struct GenerationReport {
    int n = 0;
    long long closure_dim = 0;
    long long lie_dim = 0;
    bool holds = false; // closure_dim == lie_dim
    int sweeps = 0;
};

// Does the bracket closure of {nu_ij} exhaust L_n? Reports, never asserts.
GenerationReport check_generation(int n);

Matrix action_matrix(const Element& x, Interpretation interp);

// Subspace of L_n acting as zero under the chosen interpretation, pulled back
// to Q[S_n] coordinates.
Subspace action_kernel(int n, Interpretation interp);

// The (n-1)! left-nested commutators [...[nu_{1 i_1}, nu_{2 i_2}], ...],
// s+1 <= i_s <= n, in lexicographic order of (i_1, ..., i_{n-1}).
// For n = 2 the family is {nu_12} alone.
std::vector<Element> commutator_family(int n);

struct QuotientReport {
    int n = 0;
    Interpretation interpretation = Interpretation::perm;
    long long lie_dim = 0;
    long long kernel_dim = 0;
    long long quotient_dim = 0; // lie_dim - kernel_dim
    long long predicted = 0;    // (n-1)!
    bool matches = false;       // quotient_dim == predicted
    long long commutator_count = 0; // (n-1)! for n >= 2, 0 for n = 1
    long long commutator_rank_mod_kernel = 0;
    bool commutators_form_basis = false;
};

QuotientReport quotient_report(int n, Interpretation interp);

} // namespace liesym
