#pragma once

#include <stdexcept>
#include <string>

namespace vortexmod {

/// Invalid input: out-of-range index, violated precondition, mismatched ring parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (class expressions, rationals, config files).
class ParseError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// A formula was asked for outside the range where it is asserted to hold.
class DomainError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// tau*e2*vol <= 4*pi*d: no vortex solution exists.
class StabilityError : public ParameterError {
 public:
  StabilityError(const std::string& what, double critical_tau)
      : ParameterError(what), critical_tau_(critical_tau) {}
  double critical_tau() const { return critical_tau_; }

 private:
  double critical_tau_;
};

/// Iterative solver failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vortexmod
