#pragma once

#include <stdexcept>
#include <string>

namespace isodyn {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: wrong dimension, non-positive mass, malformed scenario, ...
/// Maps to CLI exit code 2.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A divergence-free trace constraint is violated on input coefficients.
/// Maps to CLI exit code 2.
class ConstraintViolation : public Error {
public:
    using Error::Error;
};

/// The retarded time falls outside the trajectory domain.  CLI exit code 3.
class DomainExceeded : public Error {
public:
    using Error::Error;
};

/// The field point coincides with (or is too close to) the source worldline.
/// CLI exit code 3.
class OnWorldline : public Error {
public:
    using Error::Error;
};

/// An iterative solver hit its iteration cap.  CLI exit code 3.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// A numeric evaluation failed (degenerate denominator, step blow-up, ...).
/// CLI exit code 3.
class NumericFailure : public Error {
public:
    using Error::Error;
};

} // namespace isodyn
