#include "oscint/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "oscint/errors.hpp"
#include "oscint/gauss_legendre.hpp"
#include "oscint/partition.hpp"

namespace oscint {

namespace {

constexpr int kCsGridPoints = 2049;
constexpr int kHsPanels = 16;
constexpr int kHsPanelOrder = 32;
constexpr int kMaxRadius = 100000;

void require_order(int s) {
  if (s < 0 || s > kMaxJetOrder) throw DomainError("smoothness order out of range");
}

Jet cell_piece(const DensityModel& model, int m, double x, int s) {
  return bump(Jet::variable(x - m, s)) * model.jet(Jet::variable(x, s));
}

double sup_derivative(const Jet& j) {
  double best = 0.0;
  for (double v : j.derivatives()) best = std::max(best, std::fabs(v));
  return best;
}

double sum_sq_derivatives(const Jet& j) {
  double sum = 0.0;
  for (double v : j.derivatives()) sum += v * v;
  return sum;
}

}  // namespace

DensityModel gaussian_density(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("gaussian_density: sigma must be positive");
  }
  const double scale = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  const double curvature = 1.0 / (2.0 * sigma * sigma);
  DensityModel model;
  std::ostringstream label;
  label << "gaussian(sigma=" << sigma << ")";
  model.label = label.str();
  model.sigma = sigma;
  model.value = [=](double x) { return scale * std::exp(-curvature * x * x); };
  model.jet = [=](const Jet& x) { return scale * exp(-curvature * sqr(x)); };
  // Cramer's bound controls |rho^(l)| only with a sigma^{-1} prefactor for
  // sigma >= 1; below that the derivatives scale like sigma^{-(l+1)}.
  model.cs_majorant = [sigma](int m, int s) {
    return cramer_bound(sigma, s, m) * std::max(1.0, std::pow(sigma, -s));
  };
  model.tail_mass = [sigma](double L) {
    return L <= 0.0 ? 1.0 : std::erfc(L / (sigma * std::numbers::sqrt2));
  };
  return model;
}

double cramer_bound(double sigma, int s, int m) {
  if (!(sigma > 0.0)) throw DomainError("cramer_bound: sigma must be positive");
  if (s < 0) throw DomainError("cramer_bound: s must be non-negative");
  const double mbar = std::max(1.0, std::fabs(static_cast<double>(m)));
  const double shift = mbar - 1.0;
  return std::pow(2.0 * std::numbers::pi, -0.25) / sigma * std::sqrt(std::tgamma(s + 1.0)) *
         std::exp(-shift * shift / (4.0 * sigma * sigma));
}

double density_norm_cs(const DensityModel& model, const Interval& omega, int s) {
  require_order(s);
  double norm = 0.0;
  for (int i = 0; i < kCsGridPoints; ++i) {
    const double x = omega.a() + omega.length() * i / (kCsGridPoints - 1);
    norm = std::max(norm, sup_derivative(model.jet(Jet::variable(x, s))));
  }
  return norm;
}

double cell_norm_cs(const DensityModel& model, int m, int s) {
  require_order(s);
  double norm = 0.0;
  for (int i = 0; i < kCsGridPoints; ++i) {
    const double x = (m - 1.0) + 2.0 * i / (kCsGridPoints - 1);
    norm = std::max(norm, sup_derivative(cell_piece(model, m, x, s)));
  }
  return norm;
}

double cell_norm_hs(const DensityModel& model, int m, int s) {
  require_order(s);
  const auto& gl = gauss_legendre(kHsPanelOrder);
  const double width = 2.0 / kHsPanels;
  double sum = 0.0;
  for (int p = 0; p < kHsPanels; ++p) {
    const double mid = (m - 1.0) + (p + 0.5) * width;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double x = mid + 0.5 * width * gl.nodes[i];
      sum += 0.5 * width * gl.weights[i] * sum_sq_derivatives(cell_piece(model, m, x, s));
    }
  }
  return std::sqrt(sum);
}

double allocation_norm(const DensityModel& model, int m, int s, Space space) {
  return space == Space::HS ? cell_norm_cs(model, m, s) : cell_norm_hs(model, m, s);
}

double allocation_exponent(int s, Space space) {
  return space == Space::HS ? 1.0 / (s + 0.5) : 1.0 / (s + 1.0);
}

double CellPlan::p_total() const {
  double total = 0.0;
  for (const auto& c : cells) total += c.p;
  return total;
}

std::int64_t CellPlan::budget_used() const {
  std::int64_t total = 0;
  for (const auto& c : cells) total += c.n_m;
  return total;
}

CellPlanner::CellPlanner(DensityModel model, int s, Space space, double tail_tol)
    : model_(std::move(model)),
      s_(s),
      space_(space),
      tail_tol_(tail_tol),
      exponent_(allocation_exponent(s, space)) {
  if (s < 1 || s > kMaxJetOrder) throw DomainError("CellPlanner: s must be in [1, 15]");
  if (!(tail_tol > 0.0 && tail_tol <= 1e-3)) {
    throw DomainError("CellPlanner: tail_tol must lie in (0, 1e-3]");
  }
  if (!model_.cs_majorant) {
    throw ConfigurationError("density '" + model_.label + "' has no tail majorant");
  }
  // Product rule ||g_m rho||_{C^s} <= 2^s ||g||_{C^s} ||rho||_{C^s}; for the H^s norm additionally
  // ||rho||_{H^s(Omega_m)} <= sqrt((s + 1) |Omega_m|) ||rho||_{C^s(Omega_m)}.
  product_factor_ = std::pow(2.0, s) * bump_cs_norm(s);
  if (space_ == Space::CS) product_factor_ *= std::sqrt(2.0 * (s + 1.0));

  std::vector<double> negative;  // m = -1, -2, ...
  std::vector<double> positive;  // m = 0, 1, 2, ...
  double partial = 0.0;
  for (int radius = 0; radius <= kMaxRadius; ++radius) {
    if (radius == 0) {
      positive.push_back(allocation_norm(model_, 0, s_, space_));
      partial += std::pow(positive.back(), exponent_);
    } else {
      positive.push_back(allocation_norm(model_, radius, s_, space_));
      negative.push_back(allocation_norm(model_, -radius, s_, space_));
      partial += std::pow(positive.back(), exponent_) + std::pow(negative.back(), exponent_);
    }
    const double tail = tail_majorant(radius);
    if (!std::isfinite(tail)) break;
    if (partial > 0.0 && tail < tail_tol_ * partial) {
      for (auto it = negative.rbegin(); it != negative.rend(); ++it) norms_.push_back(*it);
      norms_.insert(norms_.end(), positive.begin(), positive.end());
      for (int m = -radius; m <= radius; ++m) index_.push_back(m);
      norm_sum_ = partial + tail;
      tail_bound_ = tail;
      return;
    }
  }
  throw ConfigurationError("cell norms of '" + model_.label +
                           "' are not certifiably summable (tail bound did not converge)");
}

double CellPlanner::cell_majorant(int m) const { return product_factor_ * model_.cs_majorant(m, s_); }

double CellPlanner::tail_majorant(int radius) const {
  double tail = 0.0;
  int quiet = 0;
  for (long j = radius + 1L; j <= radius + 1000000L; ++j) {
    const int m = static_cast<int>(j);
    const double term = std::pow(cell_majorant(m), exponent_) + std::pow(cell_majorant(-m), exponent_);
    if (!std::isfinite(term)) return std::numeric_limits<double>::infinity();
    tail += term;
    quiet = (term <= 1e-20 * tail || term == 0.0) ? quiet + 1 : 0;
    if (quiet >= 8) return tail;
  }
  return std::numeric_limits<double>::infinity();
}

CellPlan CellPlanner::plan(std::int64_t n) const {
  if (n < 0) throw DomainError("plan: n must be non-negative");
  CellPlan out;
  out.space = space_;
  out.s = s_;
  out.n = n;
  out.tail_tol = tail_tol_;

  std::vector<int> index = index_;
  std::vector<double> norms = norms_;
  double partial = norm_sum_ - tail_bound_;
  int radius = this->radius();
  double tail = tail_bound_;
  // Every excluded cell has p_m <= tail / norm_sum; it must get n_m = 0.
  while (static_cast<double>(n) * tail >= partial + tail) {
    if (radius >= kMaxRadius) {
      throw ConfigurationError("plan: cannot exclude tail cells for n = " + std::to_string(n));
    }
    ++radius;
    const double lo = allocation_norm(model_, -radius, s_, space_);
    const double hi = allocation_norm(model_, radius, s_, space_);
    index.insert(index.begin(), -radius);
    norms.insert(norms.begin(), lo);
    index.push_back(radius);
    norms.push_back(hi);
    partial += std::pow(lo, exponent_) + std::pow(hi, exponent_);
    tail = tail_majorant(radius);
  }

  out.radius = radius;
  out.tail_bound = tail;
  out.norm_sum = partial + tail;
  out.cells.reserve(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    CellEntry cell;
    cell.m = index[i];
    cell.cell_norm = norms[i];
    cell.p = std::pow(norms[i], exponent_) / out.norm_sum;
    cell.n_m = static_cast<std::int64_t>(std::floor(cell.p * static_cast<double>(n)));
    out.cells.push_back(cell);
  }
  return out;
}

CellPlan allocation_weights(const DensityModel& model, int s, Space space, std::int64_t n,
                            double tail_tol) {
  return CellPlanner(model, s, space, tail_tol).plan(n);
}

}  // namespace oscint
