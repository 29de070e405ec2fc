#include <doctest.h>

#include <cmath>
#include <optional>

#include "majorant/kernels.hpp"
#include "majorant/quadrature.hpp"
#include "oracles.hpp"

using namespace majorant;

TEST_CASE("midpoint sum of a constant is half the constant") {
  for (long n : {1L, 7L, 64L})
    CHECK(midpoint_sum([](double) { return 2.5; }, n) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("exactness ladder: cos(2 pi m x) vanishes on the midpoint grid for m < 2N") {
  CHECK(std::fabs(midpoint_sum([](double x) { return std::cos(4 * oracle::kPi * x); }, 4)) < 1e-15);
  for (long n : {4L, 8L, 16L, 32L, 64L})
    for (int m = 1; m < 2 * n && m <= 16; m++) {
      const double s =
          midpoint_sum([&](double x) { return std::cos(2 * oracle::kPi * m * x); }, n);
      CHECK(std::fabs(s) <= 1e-13);
    }
}

TEST_CASE("midpoint sum of G is exactly half its mean for 2N beyond the degree") {
  const TrigPoly g = build_g({1, Sign::plus});
  const double s = midpoint_sum([&](double x) { return eval(g, x); }, 8);
  CHECK(std::fabs(s - 1.5) <= 1e-13);
}

TEST_CASE("error_bound takes the better of the two derivative branches") {
  CHECK(error_bound(4900.0, std::nullopt, 24) == doctest::Approx(0.0443).epsilon(1e-2));
  CHECK(error_bound(4900.0, std::nullopt, 24) < 0.045);
  CHECK(error_bound(99800.0, std::nullopt, 175) < 0.017);
  CHECK(error_bound(260000.0, std::nullopt, 145) < 0.065);
  // first-derivative branch wins when it is smaller
  CHECK(error_bound(1000.0, 1.0, 10) == doctest::Approx(1.0 / 160.0).epsilon(1e-12));
  CHECK_THROWS_AS(error_bound(-1.0, std::nullopt, 4), std::invalid_argument);
}

TEST_CASE("plan_steps reproduces the published node counts") {
  CHECK(plan_steps(195745.0, 0.025).nodes == 202);
  CHECK(plan_steps(194242755.0, 64.512).nodes == 126);
  CHECK(plan_steps(192.0, 1.0).nodes == 2);
  CHECK(plan_steps(4900.0, 0.045).nodes == 24);
  CHECK(plan_steps(99800.0, 0.017).nodes == 175);
  CHECK(plan_steps(260000.0, 0.065).nodes == 145);
}

TEST_CASE("plan_steps returns the minimal N satisfying the strict bound") {
  const double sups[] = {10.0, 192.0, 4900.0, 99800.0, 195745.0, 3.3e7, 1.06e10};
  const double etas[] = {0.017, 0.025, 0.48, 1.0, 64.512};
  for (double s : sups)
    for (double e : etas) {
      const RiemannPlan plan = plan_steps(s, e);
      const double n = static_cast<double>(plan.nodes);
      CHECK(s / (192.0 * n * n) < e);
      if (plan.nodes > 1) CHECK(s / (192.0 * (n - 1) * (n - 1)) >= e);
      CHECK(plan.error_bound == s / (192.0 * n * n));
    }
}

namespace {

double gridmax_hxx(const KernelSpec& spec) {
  double best = 0.0;
  for (int i = 0; i <= 20000; i++) best = std::max(best, std::fabs(h_xx(spec, 0.5 * i / 20000)));
  return best;
}

}  // namespace

TEST_CASE("certified-error property for the kernel family") {
  for (int k : {1, 2})
    for (Sign sign : {Sign::plus, Sign::minus}) {
      const oracle::NodeCache cache = oracle::NodeCache::build(k, sign == Sign::plus ? 1 : -1,
                                                               1L << 20);
      for (double t : {1.0, 1.5, 2.0, 2.5})
        for (int j = 0; j <= 4; j++) {
          const KernelSpec spec{{k, sign}, t, j};
          const double ref = cache.h_sum(t, j);
          const double sup2 = 1.05 * gridmax_hxx(spec);
          for (long n : {64L, 512L}) {
            const double mid = midpoint_sum([&](double x) { return h_eval(spec, x); }, n);
            CHECK(std::fabs(mid - ref) <= error_bound(sup2, std::nullopt, n) + 1e-10);
          }
        }
    }
}

TEST_CASE("doubling N moves the result by at most twice the coarse error bound") {
  for (int k : {1, 2})
    for (double t : {1.0, 1.5, 2.5}) {
      const KernelSpec spec{{k, Sign::minus}, t, 2};
      const double sup2 = 1.05 * gridmax_hxx(spec);
      for (long n : {32L, 128L}) {
        const double a = midpoint_sum([&](double x) { return h_eval(spec, x); }, n);
        const double b = midpoint_sum([&](double x) { return h_eval(spec, x); }, 2 * n);
        CHECK(std::fabs(a - b) <= 2.0 * error_bound(sup2, std::nullopt, n) + 1e-12);
      }
    }
}
