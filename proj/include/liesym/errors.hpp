#pragma once

#include <stdexcept>
#include <string>

namespace liesym {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing elements of Q[S_n] and Q[S_m] for n != m (except via the explicit
// embedding) is always a programming error, never a recoverable condition.
struct DegreeMismatchError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Raised when a requested n exceeds the session limit; callers can distinguish
// "too big" from "wrong" (the CLI maps this to its own exit code).
struct ResourceGuardError : Error {
    using Error::Error;
};

// Invalid indices, malformed partitions, non-character class functions,
// subspaces that fail a required stability property, and similar misuse.
struct DomainError : Error {
    using Error::Error;
};

} // namespace liesym
