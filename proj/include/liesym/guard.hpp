#pragma once

namespace liesym {

// Session-wide size limit on n. Everything downstream of S_n enumeration costs
// at least n! and the Lie-element solve costs a C(2n,n) x n! exact elimination,
// so growth is brutal: the default stops at 6; 7 is allowed but expect minutes.
inline constexpr int kDefaultMaxDegree = 6;
inline constexpr int kHardMaxDegree = 7;

int max_degree();
void set_max_degree(int n);

// Throws ResourceGuardError unless 1 <= n <= max_degree().
void check_degree(int n);

} // namespace liesym
