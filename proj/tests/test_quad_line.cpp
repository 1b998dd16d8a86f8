#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <atomic>
#include <numbers>

#include "oscint/harness.hpp"
#include "oscint/quad_line.hpp"

using namespace oscint;

namespace {

LineProblem gaussian_problem(double k, int s, Space space = Space::HS, double sigma = 1.0) {
  return LineProblem{gaussian_density(sigma), k, s, space, 1e-10};
}

}  // namespace

TEST_CASE("characteristic function of the Gaussian") {
  const LineQuadrature q0(gaussian_problem(0.0, 3));
  CHECK(std::abs(q0.integrate([](double) { return 1.0; }, 2000) - 1.0) <= 1e-8);
  const LineQuadrature q1(gaussian_problem(1.0, 3));
  CHECK(std::abs(q1.integrate([](double) { return 1.0; }, 4096) - std::exp(-0.5)) <= 1e-8);
  CHECK(q0.integrate([](double) { return 1.0; }, 0) == Complex(0.0, 0.0));
}

TEST_CASE("odd integrand") {
  for (int s = 1; s <= 3; ++s) {
    const LineQuadrature q(gaussian_problem(0.0, s));
    for (std::int64_t n : {10, 100, 1000}) {
      CHECK(std::abs(q.integrate([](double x) { return x; }, n)) < 1e-14);
    }
  }
}

TEST_CASE("evaluation budget") {
  for (int s = 1; s <= 3; ++s) {
    for (Space space : {Space::HS, Space::CS}) {
      for (double k : {0.0, 20.0, 200.0}) {
        const LineQuadrature q(gaussian_problem(k, s, space));
        for (std::int64_t n = 0; n <= 4096; n = n == 0 ? 1 : n * 2) {
          CHECK(q.evaluation_count(n) <= n);
        }
      }
    }
  }
  const LineQuadrature q(gaussian_problem(0.0, 2));
  CHECK(q.evaluation_count(0) == 0);
  CHECK(q.evaluation_count(100) <= 100);
  std::int64_t prev = 0;
  for (std::int64_t n = 0; n <= 512; ++n) {
    const std::int64_t c = q.evaluation_count(n);
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("evaluation count matches the calls made") {
  const LineQuadrature q(gaussian_problem(3.0, 2));
  for (std::int64_t n : {0, 7, 100, 999}) {
    std::atomic<std::int64_t> calls{0};
    q.integrate([&](double) { ++calls; return 1.0; }, n);
    CHECK(calls == q.evaluation_count(n));
  }
}

TEST_CASE("error bound formula") {
  const LineQuadrature q(gaussian_problem(0.0, 1));
  const double r = q.plan(0).norm_sum;
  CHECK(q.error_bound(0) == doctest::Approx(4 * 2 * std::numbers::pi * std::pow(r, 1.5)));
  const LineQuadrature q3(gaussian_problem(0.0, 3));
  CHECK(q3.error_bound(1 << 22) / q3.error_bound(1 << 21) == doctest::Approx(0.125).epsilon(1e-5));
  double prev = 1e300;
  for (double k : {0.0, 2.0, 10.0, 100.0}) {
    const double b = line_error_bound(gaussian_problem(k, 2), 64);
    CHECK(b < prev);
    prev = b;
  }
  const LineQuadrature c(gaussian_problem(0.0, 2, Space::CS));
  const double rc = c.plan(8).norm_sum;
  CHECK(c.error_bound(8) == doctest::Approx(std::pow(2.0, 1.5) * std::pow(2 * std::numbers::pi, 2) *
                                            std::pow(rc, 3.0) / 81.0));
}

TEST_CASE("linearity in f") {
  const LineQuadrature q(gaussian_problem(5.0, 2));
  const auto f = [](double x) { return std::cos(x); };
  const auto g = [](double x) { return 1.0 / (1.0 + x * x); };
  const Complex lhs = q.integrate([&](double x) { return 3.0 * f(x) - g(x); }, 777);
  const Complex rhs = 3.0 * q.integrate(f, 777) - q.integrate(g, 777);
  CHECK(std::abs(lhs - rhs) < 1e-14);
}

TEST_CASE("measured errors respect the bound") {
  std::vector<std::int64_t> grid{0};
  for (std::int64_t n = 1; n <= 1024; n *= 4) grid.push_back(n);
  for (int s = 1; s <= 3; ++s) {
    for (double k : {0.0, 20.0}) {
      TestFunctionParams p;
      p.s = s;
      const LineExperiment e{testfn("runge", p), gaussian_density(1.0), k, s, Space::HS, 1e-10};
      CHECK(convergence_study(e, grid).bound_violations == 0);
      const LineExperiment c{testfn("gauss_sine", p), gaussian_density(1.0), k, s, Space::CS, 1e-10};
      CHECK(convergence_study(c, grid).bound_violations == 0);
    }
  }
}
