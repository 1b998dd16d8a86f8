#pragma once

/**
 * @file harness.hpp
 * @brief Convergence studies, rate fits, bound audits and empirical
 *        information complexity for the compact and real-line rules.
 *
 * The worst-case error is proxied by fixed test functions normalized by their
 * oracle norm; reports say so in their "proxy" field.
 */

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "oscint/density.hpp"
#include "oscint/oracle.hpp"
#include "oscint/types.hpp"

namespace oscint {

struct CompactExperiment {
  TestFunction f;
  Interval omega{0.0, 1.0};
  double k = 0.0;
  int s = 1;
  Space space = Space::HS;
};

struct LineExperiment {
  TestFunction f;
  DensityModel density;
  double k = 0.0;
  int s = 1;
  Space space = Space::HS;
  double tail_tol = 1e-10;
};

using Experiment = std::variant<CompactExperiment, LineExperiment>;

struct ConvergenceRow {
  std::int64_t n = 0;
  double error = 0.0;  ///< |reference - rule|
  double bound = 0.0;  ///< worst-case bound per unit norm
  std::int64_t evals = 0;
};

struct ConvergenceReport {
  Space space = Space::HS;
  int s = 1;
  double k = 0.0;
  std::string domain;    ///< interval or density label
  std::string function;  ///< test-function label
  double norm = 0.0;     ///< oracle norm of f (on the certified window for the line)
  Complex reference;
  double reference_error = 0.0;
  std::vector<ConvergenceRow> rows;  ///< sorted by n
  std::optional<double> fitted_rate;
  std::int64_t fit_n_min = 0;
  int bound_violations = 0;
};

struct StudyOptions {
  double oracle_tol = 1e-13;
  /// Smallest n used for the reported rate; negative selects the default
  /// max(8, 2 ceil(kbar |Omega| / pi)) for intervals and 8 for the line.
  std::int64_t fit_n_min = -1;
};

/// Runs the rule for every n in n_grid (non-empty, strictly increasing) and
/// compares against the oracle. Rows are computed in parallel and stored in
/// grid order.
ConvergenceReport convergence_study(const Experiment& experiment,
                                    const std::vector<std::int64_t>& n_grid,
                                    const StudyOptions& options = {});

/// Least-squares slope of log(error) against log(n) over rows with
/// n >= max(n_min, 1) and error > 0. InsufficientDataError below 4 rows.
double fit_rate(std::span<const std::int64_t> n, std::span<const double> error, std::int64_t n_min);
double fit_rate(const ConvergenceReport& report, std::int64_t n_min);

/// Rows with error > bound * norm. Also stores the count in the report.
int audit_bounds(ConvergenceReport& report);
int audit_bounds(const ConvergenceReport& report);

/// The certified window [-M - 1, M + 1] of the cell plan for budget n.
Interval line_window(const LineExperiment& experiment, std::int64_t n);

/// Oracle norm of the experiment's test function in its space (window for the line).
double experiment_norm(const Experiment& experiment, std::int64_t n_max);

enum class Criterion { Absolute, Normalized };
Criterion parse_criterion(std::string_view text);
std::string_view to_string(Criterion criterion);

struct ComplexityResult {
  std::int64_t n = 0;
  double target = 0.0;        ///< eps or eps * error(0)
  double initial_error = 0.0; ///< error(0)
  double achieved = 0.0;      ///< error(n)
  bool non_monotone = false;  ///< measured error rose between consecutive probes
  int probes = 0;
};

/// min{n : error_at(n) <= target} over a doubling-then-bisection probe set.
/// Throws SaturationError when no n <= n_max reaches the target.
ComplexityResult empirical_complexity(const std::function<double(std::int64_t)>& error_at, double eps,
                                      Criterion criterion, std::int64_t n_max = std::int64_t{1} << 20);

/// Same, with error_at(n) = |reference - rule(n)| / ||f|| for the experiment.
ComplexityResult empirical_complexity(const Experiment& experiment, double eps, Criterion criterion,
                                      double oracle_tol = 1e-13);

/// Columns n,k,s,space,function,error,bound,evals,rate_fit; bound is scaled by the norm.
void write_csv(std::ostream& out, std::span<const ConvergenceReport> reports);

nlohmann::json to_json(const ConvergenceReport& report);
nlohmann::json summary_json(std::span<const ConvergenceReport> reports);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace oscint
