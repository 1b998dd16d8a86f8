#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oscint/partition.hpp"

using namespace oscint;

TEST_CASE("smooth step") {
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  CHECK(smooth_step(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(smooth_step(-3.0) == 0.0);
  double prev = 0.0;
  for (int i = 1; i < 1000; ++i) {
    const double v = smooth_step(i / 1000.0);
    CHECK(v >= prev);
    if (i >= 50 && i <= 950) CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("bump values") {
  CHECK(bump(0.0) == 1.0);
  CHECK(bump(1.0) == 0.0);
  CHECK(bump(-1.0) == 0.0);
  CHECK(bump(0.3) + bump(-0.7) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bump(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(shifted_bump(3.2, 3) == bump(0.2));
}

TEST_CASE("bump derivatives") {
  for (double v : bump_jet(2.0, 3)) CHECK(v == 0.0);
  const auto d0 = bump_jet(0.0, 1);
  CHECK(d0[0] == 1.0);
  CHECK(std::fabs(d0[1]) < 1e-15);
  CHECK(bump_jet(0.5, 0)[0] == doctest::Approx(0.5));
}

TEST_CASE("partition of unity") {
  std::vector<double> a{0.5};
  CHECK(partition_residual(a) <= 1e-12);
  std::vector<double> b{-3.2, 0.0, 7.9};
  CHECK(partition_residual(b) <= 1e-12);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::vector<double> pts(1000);
  for (auto& x : pts) x = u(rng);
  CHECK(partition_residual(pts) <= 1e-12);
}

TEST_CASE("bump is non-negative and bounded by one") {
  for (int i = -1200; i <= 1200; ++i) {
    const double v = bump(i / 1000.0);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("bump C^s norm grows with s") {
  CHECK(bump_cs_norm(0) == doctest::Approx(1.0));
  CHECK(bump_cs_norm(2) > bump_cs_norm(1));
  CHECK(bump_cs_norm(3) > bump_cs_norm(2));
}
