#pragma once

#include <cstdint>
#include <random>

#include "liesym/group_algebra.hpp"
#include "liesym/perm.hpp"
#include "liesym/rational.hpp"

namespace liesym {

// Deterministic randomness for the property suites. mt19937_64 output is
// pinned by the standard; the bounded draw and shuffle are written out here
// because std::uniform_int_distribution and std::shuffle are both
// implementation-defined, which would break byte-reproducibility across
// library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [lo, hi] inclusive.
    long long in_range(long long lo, long long hi);

    Permutation random_permutation(int n); // Fisher-Yates

    // Nonzero, small numerator and denominator; plenty to exercise exactness.
    Rat random_coefficient();

    Element random_element(int degree, int max_terms);

private:
    std::mt19937_64 eng_;
};

} // namespace liesym
