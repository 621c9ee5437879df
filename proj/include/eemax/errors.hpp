#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eemax {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix dimension mismatch or non-square input.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (e.g. a matrix
/// that must be positive definite but is not).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration or scenario parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Subproblem whose optimum is not unique / not attained (flat objective).
class DegenerateProblem : public Error {
 public:
  using Error::Error;
};

/// Requested computation is not defined for the given power model.
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

/// Condition that indicates a bug in the library itself rather than bad
/// input (e.g. a best response that is not an ascent direction).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine exhausted its iteration budget. Carries the scalar
/// history of the loop (Dinkelbach s values, bisection iterates, ...) so
/// callers can attach context.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> history = {})
      : Error(what), history_(std::move(history)) {}

  const std::vector<double>& history() const { return history_; }

 private:
  std::vector<double> history_;
};

/// QoS solvers require an initial point satisfying every rate target.
/// Carries per-link slacks r_k(Q0) - R_k.
class InfeasibleStart : public Error {
 public:
  InfeasibleStart(const std::string& what, std::vector<double> slacks)
      : Error(what), slacks_(std::move(slacks)) {}

  const std::vector<double>& slacks() const { return slacks_; }

 private:
  std::vector<double> slacks_;
};

}  // namespace eemax
