#pragma once

/**
 * @file oracle.hpp
 * @brief Reference values that share no code path with the rules under test:
 *        panel Gauss-Kronrod integration sized to the oscillation, Poisson
 *        summation residuals, norm estimates and the test-function library.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "oscint/density.hpp"
#include "oscint/jet.hpp"
#include "oscint/types.hpp"

namespace oscint {

struct ReferenceResult {
  Complex value;
  double error_estimate = 0.0;
  std::int64_t panels = 0;
};

/// int_omega f(x) e^{-ikx} dx (real-valued callables convert implicitly) with panels no longer than min(|omega|/8, pi/(4 kbar)),
/// 61-point Gauss-Kronrod per panel, panel halving until the change is <= tol
/// (or at the rounding floor). Throws DomainError for tol < 1e-13 and
/// AccuracyError when 2^22 panels do not suffice.
ReferenceResult reference_integral(const ComplexFunction& f, double k, const Interval& omega,
                                   double tol);

/// int_R f(x) e^{-ikx} rho(x) dx over [-L, L] with L chosen so that
/// f_sup * mass(|x| > L) <= tol / 4; that truncation is part of the estimate.
/// f_sup must bound |f| on the whole line.
ReferenceResult reference_integral_line(const ComplexFunction& f, const DensityModel& density,
                                        double k, double tol, double f_sup = 1.0);

/// |c sum_{|j|<=trunc} f(cj) e^{-ikcj} - sum_{|z|<=trunc} Ff(z/c + k/2pi)|,
/// with Ff(xi) = int f(x) e^{-2 pi i x xi} dx.
double poisson_residual(const RealFunction& f, const ComplexFunction& fourier_f, double c,
                        double k, int trunc);

/// (sum_{l<=s} int_omega |f^(l)|^2)^{1/2} by Gauss-Kronrod panels, doubled
/// until two resolutions agree to 1e-9 relative. AccuracyError otherwise.
double norm_hs_oracle(const JetFunction& f, const Interval& omega, int s);

/// max_{l<=s} sup_omega |f^(l)| on a grid of 8193 points per unit length.
double norm_cs_oracle(const JetFunction& f, const Interval& omega, int s);

/// Norm in the given space: H^s by norm_hs_oracle, C^s by norm_cs_oracle.
double norm_oracle(const JetFunction& f, const Interval& omega, int s, Space space);

struct Membership {
  bool hs0 = false;  ///< H^s_0(support): f^(l)(a) = f^(l)(b) = 0 for l <= s - 1
  bool cs0 = false;  ///< C^s_0(support): same for l <= s
  bool hs_line = false;
  bool cs_line = false;
};

struct TestFunctionParams {
  int s = 1;
  Interval omega{0.0, 1.0};
  double frequency = 3.0;
};

struct TestFunction {
  std::string label;  ///< includes the parameters, e.g. "poly_bump_h(s=2,[0,1])"
  RealFunction value;
  JetFunction jet;
  Membership membership;
  std::optional<Interval> support;  ///< empty for functions on the whole line
  TestFunctionParams params;
  double sup_bound = 1.0;  ///< bound on |f| over R

  double operator()(double x) const { return value(x); }
};

/// Library: poly_bump_h, poly_bump_c, scaled_bump, gauss_sine, constant, runge
/// (case-insensitive). Throws DomainError for an unknown label.
TestFunction testfn(const std::string& label, const TestFunctionParams& params = {});

/// Oracle norms memoized by (function label, interval, s, space). Concurrent
/// lookups share a lock; insertions are serialized.
class NormCache {
 public:
  double norm(const TestFunction& f, const Interval& omega, int s, Space space);
  std::size_t size() const;

 private:
  using Key = std::tuple<std::string, double, double, int, int>;
  mutable std::shared_mutex mutex_;
  std::map<Key, double> cache_;
};

/// Process-wide cache.
NormCache& norm_cache();

}  // namespace oscint
