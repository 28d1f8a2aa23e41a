#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace wspark {

// Exact arithmetic throughout: arbitrary-precision rationals, always kept
// in lowest terms with positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a caller breaks a documented precondition (bad index,
// dimension mismatch, malformed value).
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an instance exceeds the subset-search size guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a mathematical precondition of a theorem-checking operation
// fails (e.g. the two vectors handed to the uncertainty check coincide).
struct PreconditionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the library catches itself producing an impossible result;
// always a bug, never a usage error.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// Parses "n" or "n/d" with optional leading minus. Returns nullopt on any
// other shape (floats are deliberately not accepted).
std::optional<Rational> parse_rational(const std::string& text);

// Canonical form: "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Floor of q as an exact integer.
Integer floor_rational(const Rational& q);

}  // namespace wspark
