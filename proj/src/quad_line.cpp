#include "oscint/quad_line.hpp"

#include <cmath>
#include <numbers>

namespace oscint {

LineQuadrature::LineQuadrature(LineProblem problem)
    : problem_(std::move(problem)),
      planner_(std::make_shared<const CellPlanner>(problem_.density, problem_.s, problem_.space,
                                                   problem_.tail_tol)) {}

std::vector<std::pair<int, QuadratureRule>> LineQuadrature::rules(std::int64_t n) const {
  const CellPlan cells = plan(n);
  std::vector<std::pair<int, QuadratureRule>> out;
  for (const auto& cell : cells.cells) {
    if (cell.n_m == 0) continue;
    const Interval omega(cell.m - 1.0, cell.m + 1.0);
    out.emplace_back(cell.m, safeguarded_rule(omega, cell.n_m, problem_.k));
  }
  return out;
}

double LineQuadrature::error_bound(std::int64_t n) const {
  const CellPlan cells = plan(n);
  const int s = problem_.s;
  const double r = cells.norm_sum;
  const double denom = std::pow(static_cast<double>(n) + kbar(problem_.k), s);
  const double two_pi_s = std::pow(2.0 * std::numbers::pi, s);
  if (problem_.space == Space::HS) return 4.0 * two_pi_s * std::pow(r, s + 0.5) / denom;
  return std::pow(2.0, 1.5) * two_pi_s * std::pow(r, s + 1.0) / denom;
}

std::int64_t LineQuadrature::evaluation_count(std::int64_t n) const {
  std::int64_t count = 0;
  for (const auto& [m, rule] : rules(n)) count += static_cast<std::int64_t>(rule.size());
  return count;
}

double line_error_bound(const LineProblem& problem, std::int64_t n) {
  return LineQuadrature(problem).error_bound(n);
}

std::int64_t evaluation_count(const LineProblem& problem, std::int64_t n) {
  return LineQuadrature(problem).evaluation_count(n);
}

}  // namespace oscint
