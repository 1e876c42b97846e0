#pragma once

#include <stdexcept>
#include <string>

namespace monocomp {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad order, bad flag value,
// inadmissible parameters).  The message names the failing condition.
// The CLI maps these to exit code 2.
struct PreconditionError : Error {
    using Error::Error;
};

struct NotPrimePowerError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct UnsupportedOrderError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotDivisibleError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct DivisionByZeroError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct EpsilonTooLargeError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NoEdgesError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct TooLargeError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotResolvableError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct ParseError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// An internal invariant failed.  This is a bug, not a usage error; the CLI
// maps it to exit code 1.
struct InternalError : Error {
    using Error::Error;
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError("internal invariant violated: " + what);
}

} // namespace monocomp
