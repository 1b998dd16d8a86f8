#pragma once

/**
 * @file quad_line.hpp
 * @brief Composite rule for I_k^rho(f) = int_R f(x) e^{-ikx} rho(x) dx.
 *
 * rho is split into rho_m = g(. - m) rho on Omega_m = [m - 1, m + 1]; cell m
 * gets n_m = floor(p_m n) nodes and is integrated by the safeguarded
 * equispaced rule applied to f rho_m.
 */

#include <cstdint>
#include <memory>
#include <vector>

#include "oscint/density.hpp"
#include "oscint/parallel.hpp"
#include "oscint/partition.hpp"
#include "oscint/quad_compact.hpp"

namespace oscint {

struct LineProblem {
  DensityModel density;
  double k = 0.0;
  int s = 1;
  Space space = Space::HS;
  double tail_tol = 1e-10;
};

/// The composite rule for one problem, with the cell norms computed once.
class LineQuadrature {
 public:
  explicit LineQuadrature(LineProblem problem);

  const LineProblem& problem() const noexcept { return problem_; }
  const CellPlanner& planner() const noexcept { return *planner_; }

  CellPlan plan(std::int64_t n) const { return planner_->plan(n); }

  /// Per-cell rules for budget n; cells with n_m = 0 are omitted.
  std::vector<std::pair<int, QuadratureRule>> rules(std::int64_t n) const;

  /// sum_m A_{n_m}(f rho_m); f may be real- or complex-valued.
  template <class F>
  Complex integrate(F&& f, std::int64_t n) const {
    const auto cells = rules(n);
    std::vector<Complex> parts(cells.size());
    const DensityModel& rho = problem_.density;
    parallel_for(cells.size(), [&](std::size_t i) {
      const int m = cells[i].first;
      parts[i] = apply_rule(cells[i].second, [&](double x) {
        return Complex{f(x)} * (bump(x - m) * rho(x));
      });
    });
    Complex total{0.0, 0.0};
    for (const auto& p : parts) total += p;
    return total;
  }

  /// Error bound per unit norm of f:
  ///   4 (2pi)^s R^{s+1/2} / (n + kbar)^s          (H^s, R = sum ||rho_m||_{C^s}^{1/(s+1/2)})
  ///   2^{3/2} (2pi)^s R^{s+1} / (n + kbar)^s      (C^s, R = sum ||rho_m||_{H^s}^{1/(s+1)})
  double error_bound(std::int64_t n) const;

  /// Exact number of integrand evaluations integrate() performs for n.
  std::int64_t evaluation_count(std::int64_t n) const;

 private:
  LineProblem problem_;
  std::shared_ptr<const CellPlanner> planner_;
};

template <class F>
Complex integrate_line(const LineProblem& problem, F&& f, std::int64_t n) {
  return LineQuadrature(problem).integrate(std::forward<F>(f), n);
}

double line_error_bound(const LineProblem& problem, std::int64_t n);
std::int64_t evaluation_count(const LineProblem& problem, std::int64_t n);

}  // namespace oscint
