#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "oscint/cli.hpp"

using namespace oscint;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("integrate") {
  const Result r = run({"integrate", "--density", "gaussian", "--sigma", "1", "--k", "1", "--s", "3",
                        "--space", "hs", "--n", "2000", "--function", "constant"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"]["re"].get<double>() == doctest::Approx(0.6065307).epsilon(1e-7));
  CHECK(j["abs_error"].get<double>() <= j["bound"].get<double>());
  CHECK(j["evaluations"].get<int>() <= 2000);
  CHECK(j["config"]["sigma"] == 1.0);
  CHECK(j["config"]["n"] == 2000);
}

TEST_CASE("bump") {
  const Result r = run({"bump", "--from", "-1.5", "--to", "1.5", "--samples", "7"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0][0] == "x");
  CHECK(rows[0][1] == "g");
  bool saw_one = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]);
    const double g = std::stod(rows[i][1]);
    if (x == 0.0) saw_one = (g == 1.0);
    if (std::fabs(x) >= 1.0) {
      for (std::size_t c = 1; c < rows[i].size(); ++c) CHECK(std::stod(rows[i][c]) == 0.0);
    }
  }
  CHECK(saw_one);
}

TEST_CASE("cells") {
  const Result r = run({"cells", "--density", "gaussian", "--s", "2", "--space", "hs", "--n", "100"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  CHECK(rows[0] == std::vector<std::string>{"m", "cell_norm", "p_m", "n_m"});
  long total = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) total += std::stol(rows[i][3]);
  CHECK(total <= 100);
  CHECK(total > 0);
}

TEST_CASE("compact, poisson, convergence and complexity") {
  const Result c = run({"compact", "--a", "-1", "--b", "1", "--n", "64", "--k", "5", "--s", "2",
                        "--function", "poly_bump_h"});
  REQUIRE(c.code == 0);
  const auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["within_bound"] == true);
  CHECK(cj["zero_rule"] == false);

  const Result p = run({"poisson", "--c", "0.5", "--k", "0"});
  REQUIRE(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["residual"].get<double>() <= 1e-12);

  const Result v = run({"convergence", "--domain", "interval", "--a", "0", "--b", "1", "--s", "1",
                        "--function", "poly_bump_h", "--n-max", "256"});
  REQUIRE(v.code == 0);
  const auto rows = csv_rows(v.out);
  CHECK(rows[0].size() == 9);
  CHECK(rows.size() == 11);

  const Result x = run({"complexity", "--domain", "line", "--function", "constant", "--k", "1", "--s", "2",
                        "--eps", "1e-2", "--criterion", "abs"});
  REQUIRE(x.code == 0);
  CHECK(nlohmann::json::parse(x.out)["n"].get<int>() > 0);
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"integrate", "--k", "2", "--s", "2", "--n", "300", "--function", "runge"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"integrate", "--n", "10", "--bogus", "1"}).code == 2);
  CHECK(run({"integrate", "--n", "10", "--sigma", "-1"}).code == 2);
  CHECK(run({"integrate", "--n", "10", "--space", "lp"}).code == 2);
  CHECK(run({"integrate", "--n", "10", "--function", "unknown"}).code == 2);
  CHECK(run({"integrate", "--n", "10", "--tail-tol", "0.5"}).code == 2);
  CHECK(run({"complexity", "--function", "constant", "--k", "100", "--s", "1", "--eps", "1e-12",
             "--criterion", "nor"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}
