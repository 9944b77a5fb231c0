#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liesym {

struct SuiteResult {
    std::string name;
    bool passed = false;
    long long checks = 0;  // individual identities verified
    std::string witness;   // first counterexample, when !passed
};

// Property suites behind `verify`:
//   transpositions - every nu_ij is a Lie element,
//   homomorphism   - A_m(xy) = A_m(x)A_m(y) and B_m([x,y]) = [B_m(x),B_m(y)]
//                    on random sparse elements, all m,
//   conjugation    - P_g K_m(x) = K_m(g x g^{-1}) P_g for K in {A,B}, all g,
//   embedding      - embedded basis vectors of L_n stay Lie in degree n+1,
//   closure        - L_n is bracket-closed and conjugation-stable.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& suite, int n, std::uint64_t seed, int samples);

} // namespace liesym
