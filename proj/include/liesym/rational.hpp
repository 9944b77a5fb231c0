#pragma once

#include <gmpxx.h>

#include <string>

namespace liesym {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through the helpers
// below -- the raw (num, den) constructor does NOT canonicalize on its own.
using Rat = mpq_class;

Rat rat(long num, long den = 1);
Rat rat_from_strings(const std::string& num, const std::string& den);

bool is_integer(const Rat& r);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_string(const Rat& r);

} // namespace liesym
