#pragma once

#include <stdexcept>
#include <string>

namespace polylog {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inversion or division by a zero element.
struct DivisionByZero : Error {
    using Error::Error;
};

/// An argument outside an operation's stated domain.
struct BadArgument : Error {
    using Error::Error;
};

/// Requested root-of-unity order does not divide p-1 (extension fields
/// are out of scope).
struct UnsupportedOrder : Error {
    using Error::Error;
};

/// Specialization or substitution hit a zero of a denominator.
struct PoleError : Error {
    using Error::Error;
};

/// Two independent constructions of the same object disagree; signals an
/// arithmetic bug, not a user error.
struct InternalInconsistency : Error {
    using Error::Error;
};

/// A bivariate fraction outgrew the configured degree cap.
struct DegreeGuardExceeded : Error {
    using Error::Error;
};

}  // namespace polylog
