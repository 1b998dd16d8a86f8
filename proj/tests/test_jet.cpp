#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oscint/density.hpp"
#include "oscint/errors.hpp"
#include "oscint/jet.hpp"
#include "oscint/partition.hpp"

using namespace oscint;

namespace {

void check_coeffs(const Jet& j, std::vector<double> expected, double tol = 1e-14) {
  REQUIRE(j.order() + 1 == static_cast<int>(expected.size()));
  for (int l = 0; l <= j.order(); ++l) CHECK(j[l] == doctest::Approx(expected[l]).epsilon(tol));
}

Jet random_jet(std::mt19937& rng, int order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(order + 1);
  for (auto& v : c) v = u(rng);
  return Jet::from_coeffs(c);
}

}  // namespace

TEST_CASE("variable jets") {
  check_coeffs(Jet::variable(2.0, 2), {2, 1, 0});
  check_coeffs(Jet::variable(0.0, 0), {0});
  check_coeffs(Jet::variable(-1.5, 3), {-1.5, 1, 0, 0});
  CHECK_THROWS_AS(Jet::variable(0.0, -1), DomainError);
}

TEST_CASE("multiplication") {
  const std::vector<double> one_one{1, 1};
  check_coeffs(Jet::from_coeffs(one_one) * Jet::from_coeffs(one_one), {1, 2});
  const std::vector<double> x{0, 1, 0};
  check_coeffs(Jet::from_coeffs(x) * Jet::from_coeffs(x), {0, 0, 1});
  const std::vector<double> two{2, 0, 0}, b{3, 5, 7};
  check_coeffs(Jet::from_coeffs(two) * Jet::from_coeffs(b), {6, 10, 14});
  CHECK_THROWS_AS(Jet::variable(1.0, 1) * Jet::variable(1.0, 2), std::invalid_argument);
}

TEST_CASE("multiplication is commutative and associative on random jets") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = trial % 8;
    const Jet a = random_jet(rng, order), b = random_jet(rng, order), c = random_jet(rng, order);
    const Jet ab = a * b, ba = b * a;
    const Jet left = (a * b) * c, right = a * (b * c);
    for (int l = 0; l <= order; ++l) {
      CHECK(std::fabs(ab[l] - ba[l]) <= 1e-14);
      CHECK(std::fabs(left[l] - right[l]) <= 1e-14);
    }
  }
}

TEST_CASE("exp") {
  check_coeffs(exp(Jet::variable(0.0, 1)), {1, 1});
  const std::vector<double> zero{0, 0, 0};
  check_coeffs(exp(Jet::from_coeffs(zero)), {1, 0, 0});
  const std::vector<double> a{1, 2};
  check_coeffs(exp(Jet::from_coeffs(a)), {std::exp(1.0), 2 * std::exp(1.0)});
  CHECK_THROWS_AS(exp(Jet::variable(800.0, 2)), OverflowError);
}

TEST_CASE("reciprocal") {
  const std::vector<double> a{2, 0}, b{1, 1}, c{4, 4, 2};
  check_coeffs(recip(Jet::from_coeffs(a)), {0.5, 0});
  check_coeffs(recip(Jet::from_coeffs(b)), {1, -1});
  check_coeffs(recip(Jet::from_coeffs(c)), {0.25, -0.25, 0.125});
  CHECK_THROWS_AS(recip(Jet::variable(0.0, 2)), DomainError);
}

TEST_CASE("sin and cos") {
  const Jet s = sin(Jet::variable(0.3, 3));
  const auto d = s.derivatives();
  CHECK(d[0] == doctest::Approx(std::sin(0.3)));
  CHECK(d[1] == doctest::Approx(std::cos(0.3)));
  CHECK(d[2] == doctest::Approx(-std::sin(0.3)));
  CHECK(d[3] == doctest::Approx(-std::cos(0.3)));
}

TEST_CASE("derivatives of compositions") {
  const auto e = derivatives([](const Jet& x) { return exp(x); }, 0.0, 3);
  for (double v : e) CHECK(v == doctest::Approx(1.0));
  const auto sq = derivatives([](const Jet& x) { return x * x; }, 3.0, 2);
  CHECK(sq[0] == doctest::Approx(9.0));
  CHECK(sq[1] == doctest::Approx(6.0));
  CHECK(sq[2] == doctest::Approx(2.0));
  const DensityModel rho = gaussian_density(1.0);
  const auto g = derivatives(rho.jet, 0.0, 2);
  CHECK(g[0] == doctest::Approx(0.3989423).epsilon(1e-7));
  CHECK(std::fabs(g[1]) < 1e-15);
  CHECK(g[2] == doctest::Approx(-0.3989423).epsilon(1e-7));
}

TEST_CASE("integer powers") {
  const auto p = pow(Jet::variable(2.0, 3), 3).derivatives();
  CHECK(p[0] == doctest::Approx(8.0));
  CHECK(p[1] == doctest::Approx(12.0));
  CHECK(p[2] == doctest::Approx(12.0));
  CHECK(p[3] == doctest::Approx(6.0));
  const auto q = pow(Jet::variable(2.0, 1), -2).derivatives();
  CHECK(q[0] == doctest::Approx(0.25));
  CHECK(q[1] == doctest::Approx(-0.25));
}

TEST_CASE("bump jet is flushed to zero outside and at the support boundary") {
  for (double x : {-1.0, 1.0, 2.0, -5.0}) {
    for (double v : bump_jet(x, 4)) CHECK(v == 0.0);
  }
  for (double v : bump_jet(1.0 - 1e-300, 4)) CHECK(std::isfinite(v));
}
