#include "oscint/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>

#include "oscint/errors.hpp"
#include "oscint/parallel.hpp"
#include "oscint/quad_compact.hpp"
#include "oscint/quad_line.hpp"

namespace oscint {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_grid(const std::vector<std::int64_t>& n_grid) {
  if (n_grid.empty()) throw DomainError("n_grid must not be empty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 0) throw DomainError("n_grid entries must be non-negative");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) throw DomainError("n_grid must be strictly increasing");
  }
}

std::string interval_label(const Interval& omega) {
  return "[" + format_double(omega.a()) + "," + format_double(omega.b()) + "]";
}

// Evaluates rule(n) for one experiment, sharing the reference and planner.
class Runner {
 public:
  Runner(const Experiment& experiment, double oracle_tol) : experiment_(experiment) {
    std::visit(Overloaded{
                   [&](const CompactExperiment& e) {
                     const auto r = reference_integral(e.f.value, e.k, e.omega, oracle_tol);
                     reference_ = r.value;
                     reference_error_ = r.error_estimate;
                   },
                   [&](const LineExperiment& e) {
                     line_.emplace(LineProblem{e.density, e.k, e.s, e.space, e.tail_tol});
                     const auto r =
                         reference_integral_line(e.f.value, e.density, e.k, oracle_tol, e.f.sup_bound);
                     reference_ = r.value;
                     reference_error_ = r.error_estimate;
                   },
               },
               experiment_);
  }

  Complex reference() const { return reference_; }
  double reference_error() const { return reference_error_; }

  ConvergenceRow row(std::int64_t n) const {
    ConvergenceRow out;
    out.n = n;
    std::visit(Overloaded{
                   [&](const CompactExperiment& e) {
                     const QuadratureRule rule = safeguarded_rule(e.omega, n, e.k);
                     out.error = std::abs(reference_ - apply_rule(rule, e.f.value));
                     out.bound = worstcase_bound(e.omega, n, e.s, e.k, e.space);
                     out.evals = static_cast<std::int64_t>(rule.size());
                   },
                   [&](const LineExperiment& e) {
                     out.error = std::abs(reference_ - line_->integrate(e.f.value, n));
                     out.bound = line_->error_bound(n);
                     out.evals = line_->evaluation_count(n);
                   },
               },
               experiment_);
    return out;
  }

  double error(std::int64_t n) const {
    return std::visit(Overloaded{
                          [&](const CompactExperiment& e) {
                            return std::abs(reference_ -
                                            apply_rule(safeguarded_rule(e.omega, n, e.k), e.f.value));
                          },
                          [&](const LineExperiment& e) {
                            return std::abs(reference_ - line_->integrate(e.f.value, n));
                          },
                      },
                      experiment_);
  }

 private:
  const Experiment& experiment_;
  std::optional<LineQuadrature> line_;
  Complex reference_;
  double reference_error_ = 0.0;
};

}  // namespace

Interval line_window(const LineExperiment& experiment, std::int64_t n) {
  const CellPlanner planner(experiment.density, experiment.s, experiment.space, experiment.tail_tol);
  const int radius = planner.plan(n).radius;
  return Interval(-radius - 1.0, radius + 1.0);
}

double experiment_norm(const Experiment& experiment, std::int64_t n_max) {
  return std::visit(Overloaded{
                        [&](const CompactExperiment& e) {
                          return norm_cache().norm(e.f, e.omega, e.s, e.space);
                        },
                        [&](const LineExperiment& e) {
                          return norm_cache().norm(e.f, line_window(e, n_max), e.s, e.space);
                        },
                    },
                    experiment);
}

ConvergenceReport convergence_study(const Experiment& experiment,
                                    const std::vector<std::int64_t>& n_grid,
                                    const StudyOptions& options) {
  check_grid(n_grid);
  const Runner runner(experiment, options.oracle_tol);

  ConvergenceReport report;
  std::visit(Overloaded{
                 [&](const CompactExperiment& e) {
                   report.space = e.space;
                   report.s = e.s;
                   report.k = e.k;
                   report.domain = interval_label(e.omega);
                   report.function = e.f.label;
                   report.fit_n_min = std::max<std::int64_t>(8, 2 * safeguard_threshold(e.omega, e.k));
                 },
                 [&](const LineExperiment& e) {
                   report.space = e.space;
                   report.s = e.s;
                   report.k = e.k;
                   report.domain = e.density.label;
                   report.function = e.f.label;
                   report.fit_n_min = 8;
                 },
             },
             experiment);
  if (options.fit_n_min >= 0) report.fit_n_min = options.fit_n_min;
  report.reference = runner.reference();
  report.reference_error = runner.reference_error();
  report.norm = experiment_norm(experiment, n_grid.back());

  report.rows.resize(n_grid.size());
  parallel_for(n_grid.size(), [&](std::size_t i) { report.rows[i] = runner.row(n_grid[i]); });

  try {
    report.fitted_rate = fit_rate(report, report.fit_n_min);
  } catch (const InsufficientDataError&) {
    report.fitted_rate.reset();
  }
  audit_bounds(report);
  return report;
}

double fit_rate(std::span<const std::int64_t> n, std::span<const double> error, std::int64_t n_min) {
  if (n.size() != error.size()) throw DomainError("fit_rate: size mismatch");
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < std::max<std::int64_t>(n_min, 1) || !(error[i] > 0.0)) continue;
    xs.push_back(std::log(static_cast<double>(n[i])));
    ys.push_back(std::log(error[i]));
  }
  if (xs.size() < 4) throw InsufficientDataError("fit_rate needs at least 4 usable rows");
  const double count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

double fit_rate(const ConvergenceReport& report, std::int64_t n_min) {
  std::vector<std::int64_t> n;
  std::vector<double> e;
  for (const auto& row : report.rows) {
    n.push_back(row.n);
    e.push_back(row.error);
  }
  return fit_rate(n, e, n_min);
}

int audit_bounds(const ConvergenceReport& report) {
  int violations = 0;
  for (const auto& row : report.rows) {
    if (row.error > row.bound * report.norm) ++violations;
  }
  return violations;
}

int audit_bounds(ConvergenceReport& report) {
  report.bound_violations = audit_bounds(static_cast<const ConvergenceReport&>(report));
  return report.bound_violations;
}

Criterion parse_criterion(std::string_view text) {
  if (text == "abs") return Criterion::Absolute;
  if (text == "nor") return Criterion::Normalized;
  throw DomainError("criterion must be 'abs' or 'nor'");
}

std::string_view to_string(Criterion criterion) {
  return criterion == Criterion::Absolute ? "abs" : "nor";
}

ComplexityResult empirical_complexity(const std::function<double(std::int64_t)>& error_at, double eps,
                                      Criterion criterion, std::int64_t n_max) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  std::map<std::int64_t, double> probed;
  auto probe = [&](std::int64_t n) {
    if (auto it = probed.find(n); it != probed.end()) return it->second;
    const double e = error_at(n);
    probed.emplace(n, e);
    return e;
  };

  ComplexityResult result;
  result.initial_error = probe(0);
  result.target = criterion == Criterion::Absolute ? eps : eps * result.initial_error;
  const auto ok = [&](std::int64_t n) { return probe(n) <= result.target; };

  if (!ok(0)) {
    std::int64_t hi = 1;
    while (!ok(hi)) {
      if (hi >= n_max) {
        throw SaturationError("target error not reached for n <= " + std::to_string(n_max));
      }
      hi = std::min(2 * hi, n_max);
    }
    std::int64_t lo = hi / 2;
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      (ok(mid) ? hi : lo) = mid;
    }
  }

  std::int64_t best = -1;
  double previous = std::numeric_limits<double>::infinity();
  for (const auto& [n, e] : probed) {
    if (best < 0 && e <= result.target) best = n;
    if (e > previous) result.non_monotone = true;
    previous = e;
  }
  result.n = best;
  result.achieved = probed.at(best);
  result.probes = static_cast<int>(probed.size());
  return result;
}

ComplexityResult empirical_complexity(const Experiment& experiment, double eps, Criterion criterion,
                                      double oracle_tol) {
  const Runner runner(experiment, oracle_tol);
  const double norm = experiment_norm(experiment, std::int64_t{1} << 12);
  if (!(norm > 0.0)) throw DomainError("test function has zero norm");
  return empirical_complexity([&](std::int64_t n) { return runner.error(n) / norm; }, eps, criterion);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

void write_csv(std::ostream& out, std::span<const ConvergenceReport> reports) {
  out << "n,k,s,space,function,error,bound,evals,rate_fit\n";
  for (const auto& report : reports) {
    const std::string rate = report.fitted_rate ? format_double(*report.fitted_rate) : "";
    for (const auto& row : report.rows) {
      out << row.n << ',' << format_double(report.k) << ',' << report.s << ','
          << to_string(report.space) << ",\"" << report.function << "\","
          << format_double(row.error) << ',' << format_double(row.bound * report.norm) << ','
          << row.evals << ',' << rate << '\n';
    }
  }
}

nlohmann::json to_json(const ConvergenceReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"n", row.n},
                    {"error", row.error},
                    {"bound", row.bound * report.norm},
                    {"bound_per_unit_norm", row.bound},
                    {"evals", row.evals}});
  }
  nlohmann::json j = {{"space", to_string(report.space)},
                      {"s", report.s},
                      {"k", report.k},
                      {"domain", report.domain},
                      {"function", report.function},
                      {"norm", report.norm},
                      {"reference", {{"re", report.reference.real()}, {"im", report.reference.imag()}}},
                      {"reference_error", report.reference_error},
                      {"fit_n_min", report.fit_n_min},
                      {"bound_violations", report.bound_violations},
                      {"proxy", "normalized test function, not a supremum over the unit ball"},
                      {"rows", rows}};
  j["fitted_rate"] = report.fitted_rate ? nlohmann::json(*report.fitted_rate) : nlohmann::json();
  return j;
}

nlohmann::json summary_json(std::span<const ConvergenceReport> reports) {
  nlohmann::json list = nlohmann::json::array();
  int violations = 0;
  for (const auto& report : reports) {
    violations += report.bound_violations;
    nlohmann::json entry = {{"function", report.function}, {"domain", report.domain},
                            {"space", to_string(report.space)}, {"s", report.s},
                            {"k", report.k}, {"bound_violations", report.bound_violations}};
    entry["fitted_rate"] = report.fitted_rate ? nlohmann::json(*report.fitted_rate) : nlohmann::json();
    list.push_back(entry);
  }
  return {{"reports", list}, {"total_bound_violations", violations}};
}

}  // namespace oscint
