#pragma once

#include <stdexcept>
#include <string>

namespace oscint {

/// Argument outside the mathematical domain of an operation (sigma <= 0,
/// zero constant term in a reciprocal, n < 1 for an unguarded rule, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A bound or formula was requested outside the range where it holds.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Jet arithmetic produced a non-finite coefficient.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An integrand returned a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The cell planner could not certify a finite truncation of the density.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reference computation did not reach its tolerance within budget.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Complexity search exhausted its budget without reaching the target.
class SaturationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Too few usable rows to fit a convergence rate.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oscint
