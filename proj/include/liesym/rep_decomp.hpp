#pragma once

#include <map>
#include <string>
#include <vector>

#include "liesym/perm.hpp"
#include "liesym/rational.hpp"
#include "liesym/subspace.hpp"

namespace liesym {

// Partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

struct ConjugacyClass {
    Partition cycle_type;
    long long size;
    Permutation representative; // consecutive cycles, longest first
};

// One class per partition, in descending lex order of cycle types.
std::vector<ConjugacyClass> conjugacy_classes(int n);

// Centralizer order z_mu = prod_i i^{m_i} m_i!; class size is n!/z_mu.
long long centralizer_order(const Partition& mu);

// Function constant on conjugacy classes, one value per partition of n,
// iterated in descending lex order.
struct ClassFunction {
    int n = 0;
    std::map<Partition, Rat, PartitionDescLex> values;

    bool operator==(const ClassFunction& o) const {
        return n == o.n && values == o.values;
    }
};

using CharacterTable = std::map<Partition, ClassFunction, PartitionDescLex>;

// Full character table of S_n via the Murnaghan-Nakayama rule; cached per n.
const CharacterTable& irreducible_characters(int n);

// Single character value chi_lambda(mu) (exposed mostly for tests).
long long character_value(const Partition& lambda, const Partition& mu);

// Dimension of the irreducible labeled lambda.
long long irreducible_dim(const Partition& lambda);

// Character of the conjugation action g . u = g u g^{-1} restricted to S.
// Throws DomainError if some conjugate of a basis vector leaves S.
ClassFunction conjugation_character(const Subspace& S);

struct DecompositionReport {
    int n = 0;
    std::map<Partition, long long, PartitionDescLex> multiplicities;
    long long total_dim = 0; // sum of multiplicity * irreducible dimension
};

// Inner product against every irreducible character. Throws DomainError when
// some multiplicity fails to be a nonnegative integer (i.e. the input was not
// a genuine character).
DecompositionReport multiplicities(const ClassFunction& chi);

struct FrobeniusReport {
    ClassFunction character;
    DecompositionReport decomp;
    std::string rendered; // "R_n = a1*s_(..) + ..."
};

FrobeniusReport frobenius_report(int n);

} // namespace liesym
