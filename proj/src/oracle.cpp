#include "oscint/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>

#include "oscint/errors.hpp"
#include "oscint/partition.hpp"
#include "oscint/quad_compact.hpp"

namespace oscint {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

constexpr std::int64_t kMaxPanels = std::int64_t{1} << 22;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct PanelSum {
  Complex value;
  double magnitude = 0.0;  // sum of |w f|, for the rounding floor
};

// Uniform panels of [a, b], each with the 61-point Kronrod rule.
template <class G>
PanelSum panel_sum(const G& g, double a, double b, std::int64_t panels) {
  const auto& x = Kronrod::abscissa();
  const auto& w = Kronrod::weights();
  const double h = (b - a) / static_cast<double>(panels);
  PanelSum out;
  for (std::int64_t p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * h;
    const double half = 0.5 * h;
    Complex panel = w[0] * g(mid);
    double mag = w[0] * std::abs(g(mid));
    for (std::size_t i = 1; i < x.size(); ++i) {
      const Complex left = g(mid - half * x[i]);
      const Complex right = g(mid + half * x[i]);
      panel += w[i] * (left + right);
      mag += w[i] * (std::abs(left) + std::abs(right));
    }
    out.value += half * panel;
    out.magnitude += half * mag;
  }
  return out;
}

ReferenceResult converge(const ComplexFunction& g, double a, double b, double min_panel_len,
                         double tol) {
  std::int64_t panels =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil((b - a) / min_panel_len)));
  PanelSum coarse = panel_sum(g, a, b, panels);
  double estimate = std::numeric_limits<double>::infinity();
  while (2 * panels <= kMaxPanels) {
    panels *= 2;
    const PanelSum fine = panel_sum(g, a, b, panels);
    estimate = std::abs(fine.value - coarse.value);
    const double floor = 50.0 * kEps * fine.magnitude;
    if (estimate <= std::max(tol, floor)) {
      return {fine.value, std::max(estimate, floor), panels};
    }
    coarse = fine;
  }
  throw AccuracyError("reference integral did not reach tolerance", estimate);
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string interval_text(const Interval& omega) {
  std::ostringstream out;
  out << '[' << omega.a() << ',' << omega.b() << ']';
  return out.str();
}

// Real-valued polynomial bump (x - a)^p (b - x)^p on [a, b], zero outside.
TestFunction poly_bump(int p, const Interval& omega) {
  const double a = omega.a();
  const double b = omega.b();
  TestFunction f;
  f.support = omega;
  f.value = [=](double x) {
    if (x <= a || x >= b) return 0.0;
    return std::pow(x - a, p) * std::pow(b - x, p);
  };
  f.jet = [=](const Jet& x) {
    if (x.value() <= a || x.value() >= b) return Jet::zero(x.order());
    return pow(x - a, p) * pow(b - x, p);
  };
  const double half = 0.5 * omega.length();
  f.sup_bound = std::pow(half * half, p);
  return f;
}

}  // namespace

ReferenceResult reference_integral(const ComplexFunction& f, double k, const Interval& omega,
                                   double tol) {
  if (!(tol >= 1e-13)) throw DomainError("reference_integral: tol must be >= 1e-13");
  const double panel_len = std::min(omega.length() / 8.0, std::numbers::pi / (4.0 * kbar(k)));
  const ComplexFunction g = [&](double x) { return f(x) * std::polar(1.0, -k * x); };
  // converge() starts from the halved resolution, so seed with twice the length.
  return converge(g, omega.a(), omega.b(), 2.0 * panel_len, tol);
}

ReferenceResult reference_integral_line(const ComplexFunction& f, const DensityModel& density,
                                        double k, double tol, double f_sup) {
  if (!(tol >= 1e-13)) throw DomainError("reference_integral_line: tol must be >= 1e-13");
  if (!density.tail_mass) {
    throw ConfigurationError("density '" + density.label + "' has no tail mass bound");
  }
  double L = 1.0;
  while (f_sup * density.tail_mass(L) > 0.25 * tol) {
    L += 1.0;
    if (L > 1e6) throw ConfigurationError("density tail too heavy for the reference integral");
  }
  const double truncation = f_sup * density.tail_mass(L);
  const ComplexFunction g = [&](double x) { return f(x) * density(x); };
  ReferenceResult r = reference_integral(g, k, Interval(-L, L), std::max(1e-13, 0.5 * tol));
  r.error_estimate += truncation;
  return r;
}

double poisson_residual(const RealFunction& f, const ComplexFunction& fourier_f, double c,
                        double k, int trunc) {
  if (c == 0.0) throw DomainError("poisson_residual: c must be nonzero");
  if (trunc < 0) throw DomainError("poisson_residual: trunc must be non-negative");
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  const double shift = k / (2.0 * std::numbers::pi);
  for (int j = -trunc; j <= trunc; ++j) {
    const double x = c * j;
    lhs += f(x) * std::polar(1.0, -k * x);
    rhs += fourier_f(j / c + shift);
  }
  return std::abs(std::fabs(c) * lhs - rhs);
}

double norm_hs_oracle(const JetFunction& f, const Interval& omega, int s) {
  if (s < 0 || s > kMaxJetOrder) throw DomainError("norm_hs_oracle: s out of range");
  const auto g = [&](double x) {
    double sum = 0.0;
    for (double d : f(Jet::variable(x, s)).derivatives()) sum += d * d;
    return Complex{sum, 0.0};
  };
  auto panels = std::max<std::int64_t>(8, static_cast<std::int64_t>(std::ceil(4.0 * omega.length())));
  double coarse = panel_sum(g, omega.a(), omega.b(), panels).value.real();
  double diff = std::numeric_limits<double>::infinity();
  while (2 * panels <= kMaxPanels) {
    panels *= 2;
    const double fine = panel_sum(g, omega.a(), omega.b(), panels).value.real();
    diff = std::fabs(fine - coarse);
    if (diff <= 1e-9 * std::fabs(fine) || fine == 0.0) return std::sqrt(fine);
    coarse = fine;
  }
  throw AccuracyError("norm_hs_oracle did not converge", diff);
}

double norm_cs_oracle(const JetFunction& f, const Interval& omega, int s) {
  if (s < 0 || s > kMaxJetOrder) throw DomainError("norm_cs_oracle: s out of range");
  const auto points = static_cast<std::int64_t>(std::ceil(8192.0 * omega.length())) + 1;
  double norm = 0.0;
  for (std::int64_t i = 0; i < points; ++i) {
    const double x = omega.a() + omega.length() * static_cast<double>(i) / static_cast<double>(points - 1);
    for (double d : f(Jet::variable(x, s)).derivatives()) norm = std::max(norm, std::fabs(d));
  }
  return norm;
}

double norm_oracle(const JetFunction& f, const Interval& omega, int s, Space space) {
  return space == Space::HS ? norm_hs_oracle(f, omega, s) : norm_cs_oracle(f, omega, s);
}

TestFunction testfn(const std::string& label, const TestFunctionParams& params) {
  const std::string name = lower(label);
  TestFunction f;
  if (name == "poly_bump_h") {
    if (params.s < 1) throw DomainError("poly_bump_h needs s >= 1");
    f = poly_bump(params.s, params.omega);
    f.membership.hs0 = true;
    f.label = "poly_bump_h(s=" + std::to_string(params.s) + "," + interval_text(params.omega) + ")";
  } else if (name == "poly_bump_c") {
    if (params.s < 0) throw DomainError("poly_bump_c needs s >= 0");
    f = poly_bump(params.s + 1, params.omega);
    f.membership.hs0 = true;
    f.membership.cs0 = true;
    f.label = "poly_bump_c(s=" + std::to_string(params.s) + "," + interval_text(params.omega) + ")";
  } else if (name == "scaled_bump") {
    const double mid = params.omega.midpoint();
    const double scale = 2.0 / params.omega.length();
    f.value = [=](double x) { return bump(scale * (x - mid)); };
    f.jet = [=](const Jet& x) { return bump(scale * (x - mid)); };
    f.support = params.omega;
    f.membership = {true, true, true, true};
    f.label = "scaled_bump(" + interval_text(params.omega) + ")";
  } else if (name == "gauss_sine") {
    const double w = params.frequency;
    f.value = [=](double x) { return std::sin(w * x) * std::exp(-0.25 * x * x); };
    f.jet = [=](const Jet& x) { return sin(w * x) * exp(-0.25 * sqr(x)); };
    f.membership.hs_line = true;
    f.membership.cs_line = true;
    std::ostringstream out;
    out << "gauss_sine(" << w << ")";
    f.label = out.str();
  } else if (name == "constant") {
    f.value = [](double) { return 1.0; };
    f.jet = [](const Jet& x) { return Jet::constant(1.0, x.order()); };
    f.membership.cs_line = true;
    f.label = "constant";
  } else if (name == "runge") {
    f.value = [](double x) { return 1.0 / (1.0 + x * x); };
    f.jet = [](const Jet& x) { return recip(1.0 + sqr(x)); };
    f.membership.hs_line = true;
    f.membership.cs_line = true;
    f.label = "runge";
  } else {
    throw DomainError("unknown test function '" + label + "'");
  }
  f.params = params;
  return f;
}

double NormCache::norm(const TestFunction& f, const Interval& omega, int s, Space space) {
  const Key key{f.label, omega.a(), omega.b(), s, static_cast<int>(space)};
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const double value = norm_oracle(f.jet, omega, s, space);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, value).first->second;
}

std::size_t NormCache::size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

NormCache& norm_cache() {
  static NormCache cache;
  return cache;
}

}  // namespace oscint
