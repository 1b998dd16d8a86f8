#include "oscint/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "oscint/density.hpp"
#include "oscint/errors.hpp"
#include "oscint/harness.hpp"
#include "oscint/oracle.hpp"
#include "oscint/partition.hpp"
#include "oscint/quad_compact.hpp"
#include "oscint/quad_line.hpp"

namespace oscint::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string subcommand;
  std::string density = "gaussian";
  double sigma = 1.0;
  double k = 0.0;
  int s = 3;
  std::string space = "hs";
  std::int64_t n = 0;
  std::string n_grid;
  std::int64_t n_max = 4096;
  std::string function = "constant";
  double frequency = 3.0;
  std::string domain = "line";
  double a = -1.0;
  double b = 1.0;
  double eps = 1e-3;
  std::string criterion = "nor";
  double tail_tol = 1e-10;
  double oracle_tol = 1e-13;
  double from = -1.5;
  double to = 1.5;
  int samples = 101;
  int order = 3;
  double c = 1.0;
  double gauss_a = 1.0;
  int trunc = 20;
  std::string out;
  std::string summary;
};

DensityModel make_density(const RunConfig& cfg) {
  if (cfg.density != "gaussian") throw DomainError("unknown density '" + cfg.density + "'");
  return gaussian_density(cfg.sigma);
}

TestFunction make_function(const RunConfig& cfg) {
  TestFunctionParams params;
  params.s = cfg.s;
  params.omega = Interval(cfg.a, cfg.b);
  params.frequency = cfg.frequency;
  return testfn(cfg.function, params);
}

Experiment make_experiment(const RunConfig& cfg) {
  const Space space = parse_space(cfg.space);
  if (cfg.domain == "interval") {
    return CompactExperiment{make_function(cfg), Interval(cfg.a, cfg.b), cfg.k, cfg.s, space};
  }
  if (cfg.domain == "line") {
    return LineExperiment{make_function(cfg), make_density(cfg), cfg.k, cfg.s, space, cfg.tail_tol};
  }
  throw DomainError("domain must be 'interval' or 'line'");
}

std::vector<std::int64_t> make_grid(const RunConfig& cfg) {
  std::vector<std::int64_t> grid;
  if (!cfg.n_grid.empty()) {
    std::stringstream in(cfg.n_grid);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        grid.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw DomainError("bad --n-grid entry '" + item + "'");
      }
    }
    return grid;
  }
  if (cfg.n_max < 0) throw DomainError("--n-max must be non-negative");
  grid.push_back(0);
  for (std::int64_t n = 1; n <= cfg.n_max; n *= 2) grid.push_back(n);
  return grid;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json config_json(const RunConfig& cfg) {
  json j = {{"subcommand", cfg.subcommand}};
  if (cfg.subcommand == "bump") {
    j.update({{"from", cfg.from}, {"to", cfg.to}, {"samples", cfg.samples}, {"order", cfg.order}});
  } else if (cfg.subcommand == "poisson") {
    j.update({{"family", "gaussian"}, {"a", cfg.gauss_a}, {"c", cfg.c}, {"k", cfg.k}, {"trunc", cfg.trunc}});
  } else {
    j.update({{"density", cfg.density}, {"sigma", cfg.sigma}, {"k", cfg.k}, {"s", cfg.s},
              {"space", cfg.space}, {"function", cfg.function}, {"frequency", cfg.frequency},
              {"tail_tol", cfg.tail_tol}, {"oracle_tol", cfg.oracle_tol}});
    if (cfg.subcommand == "compact") {
      j.update({{"a", cfg.a}, {"b", cfg.b}, {"n", cfg.n}});
    } else if (cfg.subcommand == "integrate" || cfg.subcommand == "cells") {
      j["n"] = cfg.n;
    } else {
      j.update({{"domain", cfg.domain}, {"a", cfg.a}, {"b", cfg.b}});
      if (cfg.subcommand == "complexity") j.update({{"eps", cfg.eps}, {"criterion", cfg.criterion}});
      else j.update({{"n_grid", cfg.n_grid}, {"n_max", cfg.n_max}});
    }
  }
  return j;
}

void cmd_integrate(const RunConfig& cfg, std::ostream& out) {
  const TestFunction f = make_function(cfg);
  const LineExperiment experiment{f, make_density(cfg), cfg.k, cfg.s, parse_space(cfg.space), cfg.tail_tol};
  const LineQuadrature rule(LineProblem{experiment.density, cfg.k, cfg.s, experiment.space, cfg.tail_tol});
  const Complex value = rule.integrate(f.value, cfg.n);
  const auto ref = reference_integral_line(f.value, experiment.density, cfg.k, cfg.oracle_tol, f.sup_bound);
  const Interval window = line_window(experiment, cfg.n);
  const double norm = norm_cache().norm(f, window, cfg.s, experiment.space);
  const double bound = rule.error_bound(cfg.n);
  const double error = std::abs(value - ref.value);
  json j = {{"config", config_json(cfg)},
            {"value", complex_json(value)},
            {"oracle", complex_json(ref.value)},
            {"oracle_error_estimate", ref.error_estimate},
            {"abs_error", error},
            {"bound_per_unit_norm", bound},
            {"norm", norm},
            {"norm_window", {window.a(), window.b()}},
            {"bound", bound * norm},
            {"within_bound", error <= bound * norm},
            {"evaluations", rule.evaluation_count(cfg.n)}};
  out << j.dump(2) << '\n';
}

void cmd_compact(const RunConfig& cfg, std::ostream& out) {
  const Interval omega(cfg.a, cfg.b);
  const Space space = parse_space(cfg.space);
  const TestFunction f = make_function(cfg);
  const QuadratureRule rule = safeguarded_rule(omega, cfg.n, cfg.k);
  const Complex value = apply_rule(rule, f.value);
  const auto ref = reference_integral(f.value, cfg.k, omega, cfg.oracle_tol);
  const double norm = norm_cache().norm(f, omega, cfg.s, space);
  const double bound = worstcase_bound(omega, cfg.n, cfg.s, cfg.k, space);
  const double error = std::abs(value - ref.value);
  json j = {{"config", config_json(cfg)},
            {"value", complex_json(value)},
            {"oracle", complex_json(ref.value)},
            {"oracle_error_estimate", ref.error_estimate},
            {"abs_error", error},
            {"bound_per_unit_norm", bound},
            {"norm", norm},
            {"bound", bound * norm},
            {"within_bound", error <= bound * norm},
            {"zero_rule", rule.is_zero_rule},
            {"evaluations", rule.size()}};
  out << j.dump(2) << '\n';
}

void cmd_convergence(const RunConfig& cfg, std::ostream& out) {
  const ConvergenceReport report = convergence_study(make_experiment(cfg), make_grid(cfg),
                                                     StudyOptions{cfg.oracle_tol, -1});
  write_csv(out, std::span(&report, 1));
  if (!cfg.summary.empty()) {
    std::ofstream file(cfg.summary);
    if (!file) throw DomainError("cannot open '" + cfg.summary + "'");
    json j = summary_json(std::span(&report, 1));
    j["config"] = config_json(cfg);
    file << j.dump(2) << '\n';
  }
}

void cmd_cells(const RunConfig& cfg, std::ostream& out) {
  const CellPlan plan = allocation_weights(make_density(cfg), cfg.s, parse_space(cfg.space), cfg.n, cfg.tail_tol);
  out << "m,cell_norm,p_m,n_m\n";
  for (const auto& c : plan.cells) {
    out << c.m << ',' << format_double(c.cell_norm) << ',' << format_double(c.p) << ',' << c.n_m << '\n';
  }
}

void cmd_bump(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw DomainError("--samples must be >= 1");
  if (cfg.order < 0 || cfg.order > kMaxJetOrder) throw DomainError("--order out of range");
  out << "x,g";
  for (int l = 1; l <= cfg.order; ++l) out << ",d" << l;
  out << '\n';
  for (int i = 0; i < cfg.samples; ++i) {
    const double x = cfg.samples == 1 ? cfg.from
                                      : cfg.from + (cfg.to - cfg.from) * i / (cfg.samples - 1);
    out << format_double(x);
    for (double d : bump_jet(x, cfg.order)) out << ',' << format_double(d);
    out << '\n';
  }
}

void cmd_poisson(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.gauss_a > 0.0)) throw DomainError("--a must be positive");
  const double a = cfg.gauss_a;
  const RealFunction f = [a](double x) { return std::exp(-std::numbers::pi * a * x * x); };
  const ComplexFunction ff = [a](double xi) {
    return Complex{std::exp(-std::numbers::pi * xi * xi / a) / std::sqrt(a), 0.0};
  };
  const double residual = poisson_residual(f, ff, cfg.c, cfg.k, cfg.trunc);
  json j = {{"config", config_json(cfg)}, {"residual", residual}};
  out << j.dump(2) << '\n';
}

void cmd_complexity(const RunConfig& cfg, std::ostream& out) {
  const Criterion criterion = parse_criterion(cfg.criterion);
  const ComplexityResult r = empirical_complexity(make_experiment(cfg), cfg.eps, criterion, cfg.oracle_tol);
  json j = {{"config", config_json(cfg)},
            {"n", r.n},
            {"target", r.target},
            {"initial_error", r.initial_error},
            {"achieved", r.achieved},
            {"non_monotone", r.non_monotone},
            {"probes", r.probes},
            {"proxy", "normalized test function, not a supremum over the unit ball"}};
  out << j.dump(2) << '\n';
}

void add_problem_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--density", cfg.density, "density model")->capture_default_str();
  cmd->add_option("--sigma", cfg.sigma, "standard deviation")->capture_default_str();
  cmd->add_option("--k", cfg.k, "frequency")->capture_default_str();
  cmd->add_option("--s", cfg.s, "smoothness")->capture_default_str();
  cmd->add_option("--space", cfg.space, "hs or cs")->capture_default_str();
  cmd->add_option("--function", cfg.function, "test function label")->capture_default_str();
  cmd->add_option("--freq", cfg.frequency, "gauss_sine frequency")->capture_default_str();
  cmd->add_option("--tail-tol", cfg.tail_tol, "relative tail of the cell-norm sum")->capture_default_str();
  cmd->add_option("--oracle-tol", cfg.oracle_tol, "reference integral tolerance")->capture_default_str();
  cmd->add_option("--out", cfg.out, "output file (default stdout)");
}

void add_interval_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--a", cfg.a, "left endpoint")->capture_default_str();
  cmd->add_option("--b", cfg.b, "right endpoint")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Oscillatory quadrature on intervals and the real line"};
  app.require_subcommand(1);

  auto* integrate = app.add_subcommand("integrate", "composite rule on the real line, JSON");
  add_problem_options(integrate, cfg);
  integrate->add_option("--n", cfg.n, "node budget")->required();

  auto* compact = app.add_subcommand("compact", "safeguarded rule on an interval, JSON");
  add_problem_options(compact, cfg);
  add_interval_options(compact, cfg);
  compact->add_option("--n", cfg.n, "node budget")->required();

  auto* convergence = app.add_subcommand("convergence", "convergence report, CSV");
  add_problem_options(convergence, cfg);
  add_interval_options(convergence, cfg);
  convergence->add_option("--domain", cfg.domain, "interval or line")->capture_default_str();
  convergence->add_option("--n-grid", cfg.n_grid, "comma separated n values");
  convergence->add_option("--n-max", cfg.n_max, "dyadic grid 0,1,2,4,...,n_max")->capture_default_str();
  convergence->add_option("--summary", cfg.summary, "JSON summary file");

  auto* cells = app.add_subcommand("cells", "cell plan, CSV");
  add_problem_options(cells, cfg);
  cells->add_option("--n", cfg.n, "node budget")->capture_default_str();

  auto* bump_cmd = app.add_subcommand("bump", "samples of the bump and its derivatives, CSV");
  bump_cmd->add_option("--from", cfg.from)->capture_default_str();
  bump_cmd->add_option("--to", cfg.to)->capture_default_str();
  bump_cmd->add_option("--samples", cfg.samples)->capture_default_str();
  bump_cmd->add_option("--order", cfg.order)->capture_default_str();
  bump_cmd->add_option("--out", cfg.out, "output file (default stdout)");

  auto* poisson = app.add_subcommand("poisson", "Poisson summation residual for exp(-pi a x^2), JSON");
  poisson->add_option("--a", cfg.gauss_a, "Gaussian parameter")->capture_default_str();
  poisson->add_option("--c", cfg.c, "lattice spacing")->capture_default_str();
  poisson->add_option("--k", cfg.k, "frequency")->capture_default_str();
  poisson->add_option("--trunc", cfg.trunc, "truncation index")->capture_default_str();
  poisson->add_option("--out", cfg.out, "output file (default stdout)");

  auto* complexity = app.add_subcommand("complexity", "empirical information complexity, JSON");
  add_problem_options(complexity, cfg);
  add_interval_options(complexity, cfg);
  complexity->add_option("--domain", cfg.domain, "interval or line")->capture_default_str();
  complexity->add_option("--eps", cfg.eps, "target error")->capture_default_str();
  complexity->add_option("--criterion", cfg.criterion, "abs or nor")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kValidationError;
  }

  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw DomainError("cannot open '" + cfg.out + "'");
    }
    std::ostream& sink = cfg.out.empty() ? out : file;
    sink.precision(17);
    if (cfg.subcommand == "integrate") cmd_integrate(cfg, sink);
    else if (cfg.subcommand == "compact") cmd_compact(cfg, sink);
    else if (cfg.subcommand == "convergence") cmd_convergence(cfg, sink);
    else if (cfg.subcommand == "cells") cmd_cells(cfg, sink);
    else if (cfg.subcommand == "bump") cmd_bump(cfg, sink);
    else if (cfg.subcommand == "poisson") cmd_poisson(cfg, sink);
    else if (cfg.subcommand == "complexity") cmd_complexity(cfg, sink);
    return kOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return kAccuracyError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kAccuracyError;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace oscint::cli
