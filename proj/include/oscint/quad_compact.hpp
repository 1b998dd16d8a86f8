#pragma once

/**
 * @file quad_compact.hpp
 * @brief Equispaced rules for I_k(f) = int_a^b f(x) e^{-ikx} dx, f vanishing
 *        with its derivatives at a and b.
 *
 * A_n samples f on the absolute lattice c_n Z, c_n = |Omega| / n, at the points
 * strictly inside (a, b), with weights c_n e^{-ikx}. The safeguarded rule
 * returns zero while n < kbar |Omega| / pi.
 */

#include <cmath>
#include <cstdint>
#include <vector>

#include "oscint/errors.hpp"
#include "oscint/types.hpp"

namespace oscint {

/// max(1, |k|).
double kbar(double k);

/// sqrt(1 + sum_{l=1}^s k^{2l}).
double nu_s(double k, int s);

struct QuadratureRule {
  Interval interval{0.0, 1.0};
  double k = 0.0;
  std::int64_t n_budget = 0;
  std::vector<double> nodes;
  std::vector<Complex> weights;
  bool is_zero_rule = false;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// A_n on omega. Throws DomainError for n <= 0.
QuadratureRule build_rule(const Interval& omega, std::int64_t n, double k);

/// Zero rule for n < kbar |omega| / pi, build_rule otherwise.
QuadratureRule safeguarded_rule(const Interval& omega, std::int64_t n, double k);

/// sum_j w_j f(x_j) for real- or complex-valued f. Throws EvaluationError if
/// f is not finite at a node.
template <class F>
Complex apply_rule(const QuadratureRule& rule, F&& f) {
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const Complex v{f(rule.nodes[j])};
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw EvaluationError("integrand is not finite at x = " + std::to_string(rule.nodes[j]));
    }
    sum += rule.weights[j] * v;
  }
  return sum;
}

/// Norm of I_k on the zero-boundary class: |Omega|^{1/2} / nu_s(k) for H^s,
/// |Omega| / kbar^s for C^s.
double initial_error_bound(const Interval& omega, int s, double k, Space space);

enum class BoundVariant {
  Safeguarded,  ///< valid for every n >= 0, applies to the safeguarded rule
  Sharp,        ///< 2 (2 pi)^{-s} |Omega|^{1/2} / (n/|Omega| - |k|/2pi)^s, H^s only
};

/// Worst-case error bound per unit norm of f.
///   Safeguarded: 2^{1-s} |Omega|^{1/2} / (n/|Omega| + kbar/2pi)^s       (H^s)
///                2^{1-s/2} |Omega| / (n/|Omega| + kbar/2pi)^s           (C^s)
/// Sharp throws PreconditionError unless n >= (1 + |k|) |Omega| / 2pi, and
/// for C^s.
double worstcase_bound(const Interval& omega, std::int64_t n, int s, double k, Space space,
                       BoundVariant variant = BoundVariant::Safeguarded);

/// Bounds with a free alpha in [1/3, 1):
///   2 / (2 pi alpha)^s |Omega|^{1/2} / (n/|Omega| + kbar/2pi)^s          (H^s)
///   2 / (sqrt2 pi alpha)^s |Omega| / (n/|Omega| + kbar/2pi)^s            (C^s)
/// valid for n >= (1 + alpha)/(1 - alpha) kbar |Omega| / 2pi; PreconditionError
/// below that threshold, DomainError for alpha outside [1/3, 1).
double alpha_bound(const Interval& omega, std::int64_t n, int s, double k, Space space,
                   double alpha = 1.0 / 3.0);

/// Smallest n for which the safeguarded rule is not the zero rule.
std::int64_t safeguard_threshold(const Interval& omega, double k);

}  // namespace oscint
