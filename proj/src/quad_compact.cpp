#include "oscint/quad_compact.hpp"

#include <algorithm>
#include <numbers>

namespace oscint {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_s(int s) {
  if (s < 1) throw DomainError("smoothness s must be >= 1");
}

void require_n(std::int64_t n) {
  if (n < 0) throw DomainError("n must be non-negative");
}

}  // namespace

double kbar(double k) { return std::max(1.0, std::fabs(k)); }

double nu_s(double k, int s) {
  require_s(s);
  const double k2 = k * k;
  double sum = 1.0;
  double power = 1.0;
  for (int l = 1; l <= s; ++l) {
    power *= k2;
    sum += power;
  }
  return std::sqrt(sum);
}

QuadratureRule build_rule(const Interval& omega, std::int64_t n, double k) {
  if (n <= 0) throw DomainError("build_rule: n must be >= 1");
  QuadratureRule rule;
  rule.interval = omega;
  rule.k = k;
  rule.n_budget = n;
  const double len = omega.length();
  const double c = len / static_cast<double>(n);
  const double tol = 1e-12 * len;
  const auto first = static_cast<std::int64_t>(std::floor(omega.a() / c)) - 1;
  const auto last = static_cast<std::int64_t>(std::ceil(omega.b() / c)) + 1;
  rule.nodes.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = first; j <= last; ++j) {
    const double x = c * static_cast<double>(j);
    if (x - omega.a() <= tol || omega.b() - x <= tol) continue;
    rule.nodes.push_back(x);
  }
  // The open interval holds at most n lattice points; guard against rounding.
  if (rule.nodes.size() > static_cast<std::size_t>(n)) rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.reserve(rule.nodes.size());
  for (const double x : rule.nodes) rule.weights.push_back(c * std::polar(1.0, -k * x));
  return rule;
}

std::int64_t safeguard_threshold(const Interval& omega, double k) {
  return static_cast<std::int64_t>(std::ceil(kbar(k) * omega.length() / std::numbers::pi));
}

QuadratureRule safeguarded_rule(const Interval& omega, std::int64_t n, double k) {
  require_n(n);
  if (static_cast<double>(n) < kbar(k) * omega.length() / std::numbers::pi) {
    QuadratureRule rule;
    rule.interval = omega;
    rule.k = k;
    rule.n_budget = n;
    rule.is_zero_rule = true;
    return rule;
  }
  return build_rule(omega, n, k);
}

double initial_error_bound(const Interval& omega, int s, double k, Space space) {
  require_s(s);
  if (space == Space::HS) return std::sqrt(omega.length()) / nu_s(k, s);
  return omega.length() / std::pow(kbar(k), s);
}

double worstcase_bound(const Interval& omega, std::int64_t n, int s, double k, Space space,
                       BoundVariant variant) {
  require_s(s);
  require_n(n);
  const double len = omega.length();
  const double nn = static_cast<double>(n);
  if (variant == BoundVariant::Sharp) {
    if (space != Space::HS) throw PreconditionError("sharp bound holds for H^s only");
    if (nn < (1.0 + std::fabs(k)) * len / kTwoPi) {
      throw PreconditionError("sharp bound requires n >= (1 + |k|) |Omega| / 2pi");
    }
    return 2.0 / std::pow(kTwoPi, s) * std::sqrt(len) / std::pow(nn / len - std::fabs(k) / kTwoPi, s);
  }
  const double denom = std::pow(nn / len + kbar(k) / kTwoPi, s);
  if (space == Space::HS) return 2.0 / std::pow(2.0, s) * std::sqrt(len) / denom;
  return 2.0 / std::pow(2.0, 0.5 * s) * len / denom;
}

double alpha_bound(const Interval& omega, std::int64_t n, int s, double k, Space space,
                   double alpha) {
  require_s(s);
  require_n(n);
  if (!(alpha >= 1.0 / 3.0 && alpha < 1.0)) throw DomainError("alpha must lie in [1/3, 1)");
  const double len = omega.length();
  const double nn = static_cast<double>(n);
  if (nn < (1.0 + alpha) / (1.0 - alpha) * kbar(k) * len / kTwoPi) {
    throw PreconditionError("alpha bound requires n >= (1+alpha)/(1-alpha) kbar |Omega| / 2pi");
  }
  const double denom = std::pow(nn / len + kbar(k) / kTwoPi, s);
  if (space == Space::HS) return 2.0 / std::pow(kTwoPi * alpha, s) * std::sqrt(len) / denom;
  return 2.0 / std::pow(std::numbers::sqrt2 * std::numbers::pi * alpha, s) * len / denom;
}

}  // namespace oscint
