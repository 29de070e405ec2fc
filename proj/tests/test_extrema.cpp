#include <doctest.h>

#include <cmath>
#include <limits>

#include "majorant/extrema.hpp"
#include "majorant/kernels.hpp"
#include "oracles.hpp"

using namespace majorant;

namespace {

UPoly upoly_of(std::initializer_list<double> coeffs, int pi_power = 0) {
  Eigen::ArrayXd c(static_cast<long>(coeffs.size()));
  long i = 0;
  for (double v : coeffs) c[i++] = v;
  return UPoly(c, pi_power);
}

}  // namespace

TEST_CASE("constant expression: exact bound and witness") {
  const BoundResult r = certified_max(UExpr::constant(5.0), Interval(-2.0, 3.0), 1e-9);
  CHECK(r.certified_bound == 5.0);
  CHECK(r.witness_value == 5.0);
  CHECK(r.converged);
}

TEST_CASE("quadratic with known vertex") {
  // 2 + 0.6u - u^2, maximum 2.09 at u = 0.3
  const UExpr e = UExpr::poly(upoly_of({2.0, 0.6, -1.0}));
  const BoundResult r = certified_max(e, Interval(-1.0, 1.0), 1e-9);
  CHECK(r.converged);
  CHECK(r.certified_bound >= 2.09 - 1e-12);
  CHECK(r.certified_bound <= 2.09 + 1e-8);
  CHECK(std::fabs(r.witness_point - 0.3) < 1e-3);
}

TEST_CASE("max of the negation equals minus the min, exactly") {
  const UExpr e = UExpr::poly(to_upoly(build_g({1, Sign::plus})));
  const BoundResult mx = certified_max(-e, Interval(-1.0, 1.0), 1e-8);
  const BoundResult mn = certified_min(e, Interval(-1.0, 1.0), 1e-8);
  CHECK(mx.certified_bound == -mn.certified_bound);
  CHECK(mx.witness_value == -mn.witness_value);
  CHECK(mx.witness_point == mn.witness_point);
}

TEST_CASE("halving the tolerance never increases the certified max") {
  const CasePolys& polys = case_polys({1, Sign::plus});
  const UExpr e = UExpr::poly(to_upoly(multiply(polys.gp, polys.gp))) /
                  UExpr::poly(to_upoly(polys.g));
  double tol = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 7; i++) {
    const BoundResult r = certified_max(e, Interval(-1.0, 1.0), tol);
    CHECK(r.converged);
    CHECK(r.certified_bound <= prev);
    CHECK(r.certified_bound - r.witness_value <= tol);
    prev = r.certified_bound;
    tol *= 0.5;
  }
}

TEST_CASE("certified minima of G match the independently computed extrema") {
  const Interval dom(-1.0, 1.0);
  struct Row {
    int k;
    Sign s;
    double truth;
  };
  const Row rows[] = {{1, Sign::plus, 0.3688696906},
                      {1, Sign::minus, 0.1205802533},
                      {2, Sign::plus, 0.2678032136},
                      {2, Sign::minus, 0.0586228318}};
  for (const Row& row : rows) {
    const UExpr e = UExpr::poly(to_upoly(build_g({row.k, row.s})));
    const BoundResult r = certified_min_rel(e, dom, 1e-9);
    CHECK(r.converged);
    CHECK(r.certified_bound <= row.truth + 1e-9);
    CHECK(r.certified_bound >= row.truth - 1e-6);
    CHECK(r.witness_value >= r.certified_bound);
  }
}

TEST_CASE("comparison constants: raw suprema and rounded certificates") {
  const Interval dom(-1.0, 1.0);
  const CasePolys& p1 = case_polys({1, Sign::plus});
  const CasePolys& m1 = case_polys({1, Sign::minus});
  const CasePolys& p2 = case_polys({2, Sign::plus});
  const CasePolys& m2 = case_polys({2, Sign::minus});
  auto quot = [&](const CasePolys& polys, bool second) {
    if (second) return UExpr::abs(UExpr::poly(to_upoly(polys.gdd)));
    return UExpr::poly(to_upoly(multiply(polys.gp, polys.gp)));
  };
  struct Row {
    UExpr num, den;
    double truth;    // brute-force supremum of the quotient
    double rounded;  // granularity-100 certificate
  };
  const Row rows[] = {
      {quot(p1, false), UExpr::poly(to_upoly(p1.g)), 1285.323348, 1300.0},
      {quot(m1, false), UExpr::poly(to_upoly(m1.g)), 1084.495030, 1100.0},
      {quot(p1, true), UExpr::poly(to_upoly(p1.g)), 2124.580709, 2200.0},
      {quot(m1, true), UExpr::poly(to_upoly(m1.g)), 3991.457085, 4000.0},
      {quot(p2, false), UExpr::poly(to_upoly(p2.g)), 2228.008363, 2300.0},
      {quot(m2, false), UExpr::poly(to_upoly(m2.g)), 2526.618727, 2600.0},
  };
  for (const Row& row : rows) {
    const double raw = comparison_constant(row.num, row.den, dom, 1e-4, 0.0);
    CHECK(raw >= row.truth - 1e-6);
    CHECK(raw <= row.truth + 1e-2);
    CHECK(comparison_constant(row.num, row.den, dom, 1e-4, 100.0) == row.rounded);
  }
}

TEST_CASE("soundness against a 1e6-point grid for every expression in the build") {
  for (int k : {1, 2}) {
    for (const NamedQuery& q : bound_inventory(k)) {
      const long n = 1000000;
      if (q.is_max) {
        const double gm = oracle::grid_max([&](double u) { return q.expr(u); }, q.domain.lo,
                                           q.domain.hi, n);
        CHECK_MESSAGE(q.certified >= gm - 1e-9 * (1.0 + std::fabs(gm)), q.name);
        CHECK(q.witness <= q.certified);
      } else {
        const double gm = oracle::grid_min([&](double u) { return q.expr(u); }, q.domain.lo,
                                           q.domain.hi, n);
        CHECK_MESSAGE(q.certified <= gm + 1e-9 * (1.0 + std::fabs(gm)), q.name);
        CHECK(q.witness >= q.certified);
      }
      const BoundResult wit = q.is_max ? certified_max_rel(q.expr, q.domain, 1e-6)
                                       : certified_min_rel(q.expr, q.domain, 1e-6);
      CHECK(wit.witness_point >= q.domain.lo);
      CHECK(wit.witness_point <= q.domain.hi);
    }
  }
}

TEST_CASE("cancellation bound for ||G'||, k=2") {
  const UExpr w = UExpr::variable();
  const UExpr e = UExpr::sqrt(w) * (UExpr::abs(5.0 - 6.0 * w) +
                                    8.0 * UExpr::sqrt(1.0 - w) * UExpr::abs(1.0 - 2.0 * w));
  const BoundResult r = certified_max(e, Interval(0.0, 1.0), 1e-8);
  CHECK(r.converged);
  CHECK(r.certified_bound >= 3.630398 - 1e-6);
  CHECK(r.certified_bound <= 3.630398 + 1e-4);
  CHECK(r.witness_value >= 3.6303);
}

TEST_CASE("domain violations are rejected with the offending subinterval") {
  const UExpr u = UExpr::variable();
  CHECK_THROWS_AS(certified_max(UExpr::sqrt(u), Interval(-1.0, 1.0), 1e-6), DomainViolation);
  CHECK_THROWS_AS(certified_max(UExpr::constant(1.0) / u, Interval(-1.0, 1.0), 1e-6),
                  DomainViolation);
  CHECK_THROWS_AS(comparison_constant(UExpr::constant(1.0), u, Interval(-1.0, 1.0), 1e-6),
                  DomainViolation);
  // sqrt over a region where the argument is genuinely nonnegative is fine
  const BoundResult ok = certified_max(UExpr::sqrt(u), Interval(0.0, 1.0), 1e-9);
  CHECK(ok.certified_bound >= 1.0);
  CHECK(ok.certified_bound <= 1.0 + 1e-8);
}

TEST_CASE("exhausted budget reports failure with best bounds so far") {
  const UExpr e = UExpr::poly(to_upoly(build_g({1, Sign::plus})));
  SearchLimits limits;
  limits.max_depth = 3;
  const BoundResult r = certified_max(e, Interval(-1.0, 1.0), 1e-18, limits);
  CHECK(!r.converged);
  CHECK(r.certified_bound >= r.witness_value);
  CHECK(r.certified_bound >= 9.0 - 1e-9);  // still a valid upper bound
}
