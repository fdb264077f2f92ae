#pragma once

#include <stdexcept>
#include <string>

namespace octant {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix or state failed one of the density-matrix invariants.
struct ValidationError : Error {
  enum class Kind { state, hermiticity, trace, positivity };

  ValidationError(Kind kind, const std::string& msg, double violation = 0.0)
      : Error(msg), kind(kind), violation(violation) {}

  Kind kind;
  double violation;  // offending quantity: deviation, trace, eigenvalue, ...
};

/// Bad run configuration: unknown preset, malformed input, unusable option.
struct ConfigError : Error {
  using Error::Error;
};

/// The schedule shape is not handled by the requested operation.
struct UnsupportedScheduleError : Error {
  using Error::Error;
};

/// The integrator could not reach the requested tolerance.
struct IntegrationError : Error {
  IntegrationError(double time, const std::string& msg) : Error(msg), time(time) {}
  double time;
};

}  // namespace octant
