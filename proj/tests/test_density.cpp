#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oscint/density.hpp"
#include "oscint/errors.hpp"
#include "oscint/oracle.hpp"
#include "oscint/partition.hpp"

using namespace oscint;

TEST_CASE("gaussian density") {
  const DensityModel rho = gaussian_density(1.0);
  CHECK(rho(0.0) == doctest::Approx(0.3989423).epsilon(1e-7));
  CHECK(std::fabs(derivatives(rho.jet, 0.0, 1)[1]) < 1e-15);
  const DensityModel wide = gaussian_density(2.0);
  const auto total = reference_integral_line([](double) { return 1.0; }, wide, 0.0, 1e-12);
  CHECK(std::fabs(total.value.real() - 1.0) <= 1e-10);
  CHECK_THROWS_AS(gaussian_density(0.0), DomainError);
  CHECK_THROWS_AS(gaussian_density(-1.0), DomainError);
}

TEST_CASE("cramer bound") {
  CHECK(cramer_bound(1.0, 0, 1) == doctest::Approx(0.6316187).epsilon(1e-7));
  CHECK(cramer_bound(1.0, 0, 0) == cramer_bound(1.0, 0, 1));
  CHECK(cramer_bound(1.0, 2, 3) == doctest::Approx(0.3286060).epsilon(1e-6));
  CHECK_THROWS_AS(cramer_bound(0.0, 1, 0), DomainError);
}

TEST_CASE("cramer bound dominates the density's C^s norm on every cell") {
  for (double sigma : {1.0, 2.0}) {
    const DensityModel rho = gaussian_density(sigma);
    for (int s = 0; s <= 4; ++s) {
      for (int m = -15; m <= 15; ++m) {
        const double norm = density_norm_cs(rho, Interval(m - 1.0, m + 1.0), s);
        CHECK(norm <= cramer_bound(sigma, s, m));
      }
    }
  }
}

TEST_CASE("cell norms") {
  const DensityModel rho = gaussian_density(1.0);
  CHECK(cell_norm_cs(rho, 0, 0) == doctest::Approx(rho(0.0)).epsilon(1e-14));
  CHECK(cell_norm_cs(rho, 12, 2) <= cramer_bound(1.0, 2, 12));
  for (int m = 1; m <= 6; ++m) {
    CHECK(std::fabs(cell_norm_cs(rho, m, 3) - cell_norm_cs(rho, -m, 3)) <= 1e-10);
    CHECK(std::fabs(cell_norm_hs(rho, m, 3) - cell_norm_hs(rho, -m, 3)) <= 1e-10);
  }
  const JetFunction piece = [&](const Jet& x) { return bump(x) * rho.jet(x); };
  const double oracle = norm_hs_oracle(piece, Interval(-1.0, 1.0), 1);
  CHECK(std::fabs(cell_norm_hs(rho, 0, 1) - oracle) <= 1e-8 * oracle);
}

TEST_CASE("product norm inequality for the central cell") {
  const DensityModel rho = gaussian_density(1.0);
  for (int s = 1; s <= 3; ++s) {
    const double lhs = cell_norm_hs(rho, 0, s);
    const double rhs = std::pow(2.0, s) * norm_hs_oracle(rho.jet, Interval(-1.0, 1.0), s) * bump_cs_norm(s);
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("summability of cell norms") {
  for (double sigma : {1.0, 2.0}) {
    const DensityModel rho = gaussian_density(sigma);
    for (int s = 1; s <= 3; ++s) {
      const double q = allocation_exponent(s, Space::HS);
      const int cutoff = static_cast<int>(10 * sigma + 5);
      double partial = 0.0;
      for (int m = -cutoff; m <= cutoff; ++m) partial += std::pow(cell_norm_cs(rho, m, s), q);
      double extended = partial;
      for (int m = cutoff + 1; m <= cutoff + 10; ++m) {
        extended += std::pow(cell_norm_cs(rho, m, s), q) + std::pow(cell_norm_cs(rho, -m, s), q);
      }
      CHECK(extended - partial <= 1e-10 * partial);
    }
  }
}

TEST_CASE("allocation weights") {
  const DensityModel rho = gaussian_density(1.0);
  const CellPlan zero = allocation_weights(rho, 2, Space::HS, 0, 1e-10);
  for (const auto& c : zero.cells) CHECK(c.n_m == 0);
  CHECK(zero.p_total() >= 1.0 - 1e-10);
  CHECK(zero.p_total() <= 1.0);

  const CellPlan plan = allocation_weights(rho, 2, Space::HS, 100, 1e-10);
  CHECK(plan.budget_used() <= 100);
  for (const auto& c : plan.cells) {
    CHECK(c.n_m == static_cast<std::int64_t>(std::floor(c.p * 100)));
    CHECK(c.p >= 0.0);
    CHECK(c.p <= 1.0);
    CHECK(c.cell_norm > 0.0);
  }
  for (int s = 1; s <= 3; ++s) {
    for (Space space : {Space::HS, Space::CS}) {
      const CellPlan p = allocation_weights(rho, s, space, 1000, 1e-10);
      const std::size_t n = p.cells.size();
      for (std::size_t i = 0; i < n / 2; ++i) {
        CHECK(p.cells[i].m == -p.cells[n - 1 - i].m);
        CHECK(std::fabs(p.cells[i].p - p.cells[n - 1 - i].p) <= 1e-10);
      }
      CHECK(p.p_total() >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("planner validation") {
  const DensityModel rho = gaussian_density(1.0);
  CHECK_THROWS_AS(CellPlanner(rho, 2, Space::HS, 0.0), DomainError);
  CHECK_THROWS_AS(CellPlanner(rho, 2, Space::HS, 1e-2), DomainError);
  CHECK_THROWS_AS(CellPlanner(rho, 0, Space::HS, 1e-10), DomainError);
  CHECK_THROWS_AS(CellPlanner(rho, 2, Space::HS, 1e-10).plan(-1), DomainError);

  DensityModel heavy = rho;
  heavy.label = "no-decay";
  heavy.cs_majorant = [](int, int) { return 1.0; };
  CHECK_THROWS_AS(CellPlanner(heavy, 2, Space::HS, 1e-10), ConfigurationError);
}

TEST_CASE("large budgets push the certified radius outward") {
  const CellPlanner planner(gaussian_density(1.0), 1, Space::HS, 1e-3);
  const CellPlan small = planner.plan(10);
  const CellPlan huge = planner.plan(std::int64_t{1} << 40);
  CHECK(huge.radius >= small.radius);
  CHECK(static_cast<double>(huge.n) * huge.tail_bound < huge.norm_sum);
}
