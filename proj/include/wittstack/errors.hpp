#ifndef WITTSTACK_ERRORS_HPP
#define WITTSTACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wittstack {

// Base class for all domain errors raised by the library. CLI maps these to
// exit code 1; usage/parse problems map to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : Error {
    using Error::Error;
};

// (p, n) outside the configured Witt caps.
struct CapExceeded : Error {
    using Error::Error;
};

// Witt vectors over different coefficient rings or different (p, n).
struct MismatchedRing : Error {
    using Error::Error;
};

// A series computation needs terms beyond the available precision window.
struct PrecisionExhausted : Error {
    using Error::Error;
};

struct BadLength : Error {
    using Error::Error;
};

// Safety valve for the ASW reduction loop; signals a bug, not a math failure.
struct NonTerminating : Error {
    using Error::Error;
};

// Herbrand translation produced a non-integral lower jump where an integer
// filtration index was required.
struct NonIntegralLowerJump : Error {
    using Error::Error;
};

// Riemann-Roch bookkeeping cannot be resolved on this coarse space.
struct UnsupportedBase : Error {
    using Error::Error;
};

// A component denominator has an irreducible factor of degree > 1.
struct IrrationalBranchPoint : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace wittstack

#endif
