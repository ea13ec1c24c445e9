#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mcmullen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The map was evaluated at its pole z = 0.
class PoleError : public Error {
 public:
  PoleError() : Error("map evaluated at the pole z = 0") {}
};

/// Inputs violate an operation's precondition or a type invariant.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A region would be empty or degenerate for the given parameters.
class DegenerateRegionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parameters lie outside the hypotheses of the statement being checked.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two quantities that must agree by construction did not.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Root finder failed to converge; carries the residuals of its best iterate.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, std::vector<double> residuals)
      : Error(what), residuals_(std::move(residuals)) {}

  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

/// A sampled path moved too far between consecutive samples to track its
/// argument reliably. Retry with more samples.
class UnderSamplingError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcmullen
