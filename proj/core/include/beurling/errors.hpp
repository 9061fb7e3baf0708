#pragma once

#include <stdexcept>
#include <string>

namespace beurling {

/// Base of every error raised by the library. The CLI maps the three
/// families below onto exit codes 2, 3 and 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (exit code 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested range exceeds the range on which a prime list is complete.
class CompletenessError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Dirichlet-type evaluation outside the half-plane of convergence.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation at (or numerically at) a pole or zero of a denominator.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical diagnostic could not be made reliable (exit code 3).
class ReliabilityError : public Error {
 public:
  using Error::Error;
};

/// Kernel mass beyond the available data exceeds the truncation budget
/// (exit code 4). Carries the range that would have been needed.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double needed_x_max)
      : Error(what), needed_x_max_(needed_x_max) {}

  /// Needed upper end of the data range, in the log (x = log u) scale.
  double needed_x_max() const noexcept { return needed_x_max_; }

 private:
  double needed_x_max_;
};

}  // namespace beurling
