#pragma once

/**
 * @file density.hpp
 * @brief Densities rho, their partition-of-unity pieces rho_m = g(. - m) rho,
 *        per-cell norms and the node-budget allocation p_m, n_m = floor(p_m n).
 *
 * Cell m lives on Omega_m = [m - 1, m + 1]. For the H^s(R) problem the
 * allocation weights are proportional to ||rho_m||_{C^s(Omega_m)}^{1/(s+1/2)},
 * for the C^s(R) problem to ||rho_m||_{H^s(Omega_m)}^{1/(s+1)}.
 *
 * The infinite index set is truncated to |m| <= M with a certified tail: every
 * density carries a majorant of ||rho||_{C^s(Omega_m)} (Cramer's bound for the
 * Gaussian), which bounds the neglected part of the norm sum.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oscint/jet.hpp"
#include "oscint/types.hpp"

namespace oscint {

/// Evaluable density with jet access and a certified cell-norm majorant.
struct DensityModel {
  std::string label;
  double sigma = 1.0;
  RealFunction value;
  JetFunction jet;
  /// Upper bound on ||rho||_{C^s([m-1, m+1])}.
  std::function<double(int m, int s)> cs_majorant;
  /// Mass outside [-L, L]; lets reference integrals bound their truncation.
  std::function<double(double L)> tail_mass;

  double operator()(double x) const { return value(x); }
};

/// Normal density with standard deviation sigma. Throws DomainError for sigma <= 0.
DensityModel gaussian_density(double sigma);

/// (2 pi)^{-1/4} sigma^{-1} sqrt(s!) exp(-(mbar - 1)^2 / (4 sigma^2)), mbar = max(1, |m|).
double cramer_bound(double sigma, int s, int m);

/// ||rho||_{C^s(omega)} of the density alone, on a 2049-point grid.
double density_norm_cs(const DensityModel& model, const Interval& omega, int s);

/// ||g_m rho||_{C^s(Omega_m)} on a uniform grid of 2049 points.
double cell_norm_cs(const DensityModel& model, int m, int s);

/// ||g_m rho||_{H^s(Omega_m)} by 16 panels of 32-point Gauss-Legendre.
double cell_norm_hs(const DensityModel& model, int m, int s);

/// Norm used for the allocation in the given problem space (C^s norm for
/// H^s problems, H^s norm for C^s problems).
double allocation_norm(const DensityModel& model, int m, int s, Space space);

/// 1/(s + 1/2) for H^s problems, 1/(s + 1) for C^s problems.
double allocation_exponent(int s, Space space);

struct CellEntry {
  int m = 0;
  double cell_norm = 0.0;
  double p = 0.0;
  std::int64_t n_m = 0;
};

struct CellPlan {
  Space space = Space::HS;
  int s = 1;
  std::int64_t n = 0;
  double tail_tol = 0.0;
  std::vector<CellEntry> cells;  ///< m ascending, |m| <= radius
  double norm_sum = 0.0;         ///< finite sum plus tail majorant; >= rho_{C^s} / rho_{H^s}
  double tail_bound = 0.0;       ///< majorant of sum_{|m| > radius} cell_norm^q
  int radius = 0;

  double p_total() const;
  std::int64_t budget_used() const;
};

/// Computes and memoizes cell norms for one (density, s, space) and produces
/// plans for any n. Immutable after construction; plan() is thread-safe.
class CellPlanner {
 public:
  CellPlanner(DensityModel model, int s, Space space, double tail_tol);

  CellPlan plan(std::int64_t n) const;

  const DensityModel& density() const noexcept { return model_; }
  int s() const noexcept { return s_; }
  Space space() const noexcept { return space_; }
  double tail_tol() const noexcept { return tail_tol_; }
  /// Radius M certified by the relative tail criterion alone.
  int radius() const noexcept { return static_cast<int>(index_.size() / 2); }
  /// rho_{C^s} (H^s problems) or rho_{H^s} (C^s problems), upper estimate.
  double norm_sum() const noexcept { return norm_sum_; }
  double tail_bound() const noexcept { return tail_bound_; }
  /// Majorant of ||rho_m|| in the allocation norm, from the density majorant.
  double cell_majorant(int m) const;
  /// Majorant of sum_{|m| > radius} norm_m^q.
  double tail_majorant(int radius) const;

 private:
  DensityModel model_;
  int s_;
  Space space_;
  double tail_tol_;
  double exponent_;
  double product_factor_;
  std::vector<int> index_;
  std::vector<double> norms_;
  double norm_sum_ = 0.0;
  double tail_bound_ = 0.0;
};

/// One-shot planner; see CellPlanner for repeated use.
CellPlan allocation_weights(const DensityModel& model, int s, Space space, std::int64_t n,
                            double tail_tol);

}  // namespace oscint
