#include "oscint/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

double h_scalar(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// exp(-1/t) on jets. Flushed to the zero jet where the value itself is zero:
// for t <= 0 by definition, and for tiny t > 0 where exp underflows and the
// 1/t^(l+1) factors of the derivatives would otherwise produce inf * 0.
Jet h_jet(const Jet& t) {
  if (t.value() <= 0.0 || h_scalar(t.value()) == 0.0) return Jet::zero(t.order());
  return exp(-recip(t));
}

constexpr int kBumpNormGrid = 40001;

}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = h_scalar(x);
  const double b = h_scalar(1.0 - x);
  return a / (a + b);
}

Jet smooth_step(const Jet& x) {
  const double x0 = x.value();
  if (x0 <= 0.0) return Jet::zero(x.order());
  if (x0 >= 1.0) return Jet::constant(1.0, x.order());
  const Jet a = h_jet(x);
  const Jet b = h_jet(1.0 - x);
  return a * recip(a + b);
}

double bump(double x) {
  if (x <= -1.0 || x >= 1.0) return 0.0;
  return smooth_step(1.0 - std::fabs(x));
}

Jet bump(const Jet& x) {
  const double x0 = x.value();
  if (x0 <= -1.0 || x0 >= 1.0) return Jet::zero(x.order());
  // phi(x + 1) on (-1, 0], 1 - phi(x) = phi(1 - x) on (0, 1).
  return x0 <= 0.0 ? smooth_step(x + 1.0) : smooth_step(1.0 - x);
}

std::vector<double> bump_jet(double x, int order) {
  if (order < 0) throw DomainError("bump_jet order must be non-negative");
  return bump(Jet::variable(x, order)).derivatives();
}

double partition_residual(std::span<const double> points) {
  double worst = 0.0;
  for (const double x : points) {
    const auto base = static_cast<long>(std::floor(x));
    double sum = 0.0;
    for (long m = base - 1; m <= base + 2; ++m) {
      if (std::fabs(x - static_cast<double>(m)) < 1.0) sum += bump(x - static_cast<double>(m));
    }
    worst = std::max(worst, std::fabs(sum - 1.0));
  }
  return worst;
}

double bump_cs_norm(int s) {
  if (s < 0 || s > kMaxJetOrder) throw DomainError("bump_cs_norm: order out of range");
  static std::mutex mutex;
  static std::map<int, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(s); it != cache.end()) return it->second;
  }
  double norm = 0.0;
  for (int i = 0; i < kBumpNormGrid; ++i) {
    const double x = -1.0 + 2.0 * i / (kBumpNormGrid - 1);
    const Jet g = bump(Jet::variable(x, s));
    const auto d = g.derivatives();
    for (double v : d) norm = std::max(norm, std::fabs(v));
  }
  std::lock_guard lock(mutex);
  cache.emplace(s, norm);
  return norm;
}

}  // namespace oscint
