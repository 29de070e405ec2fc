#include <doctest.h>

#include <cmath>
#include <random>

#include "majorant/trigpoly.hpp"
#include "oracles.hpp"

using namespace majorant;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

bool coeffs_equal(const Eigen::ArrayXd& a, std::initializer_list<double> want) {
  if (a.size() != static_cast<long>(want.size())) return false;
  long i = 0;
  for (double w : want)
    if (a[i++] != w) return false;
  return true;
}
}  // namespace

TEST_CASE("build_g produces the squared modulus with merged frequencies") {
  CHECK(coeffs_equal(build_g({1, Sign::plus}).cos_coeffs(), {3, 2, 2, 2}));
  CHECK(coeffs_equal(build_g({2, Sign::minus}).cos_coeffs(), {3, 2, 0, -2, -2}));
  CHECK(coeffs_equal(build_g({0, Sign::plus}).cos_coeffs(), {3, 4, 2}));
  CHECK(coeffs_equal(build_g({0, Sign::minus}).cos_coeffs(), {3, 0, -2}));
  CHECK(build_g({1, Sign::plus}).pi_power() == 0);
  CHECK_THROWS_AS(build_g({-1, Sign::plus}), std::invalid_argument);
}

TEST_CASE("differentiate keeps integer coefficients with pi factored out") {
  const TrigPoly gp = differentiate(build_g({1, Sign::plus}), 1);
  CHECK(gp.pi_power() == 1);
  CHECK(coeffs_equal(gp.sin_coeffs(), {-4, -8, -12}));
  CHECK((gp.cos_coeffs() == 0.0).all());

  const TrigPoly gdd = differentiate(build_g({2, Sign::minus}), 2);
  CHECK(gdd.pi_power() == 2);
  CHECK(coeffs_equal(gdd.cos_coeffs(), {0, -8, 0, 72, 128}));
  CHECK((gdd.sin_coeffs() == 0.0).all());

  const TrigPoly same = differentiate(build_g({1, Sign::minus}), 0);
  CHECK(coeffs_equal(same.cos_coeffs(), {3, 2, -2, -2}));
}

TEST_CASE("differentiate matches central finite differences") {
  for (int k : {1, 2})
    for (Sign s : {Sign::plus, Sign::minus}) {
      const TrigPoly g = build_g({k, s});
      const TrigPoly g1 = differentiate(g, 1);
      const TrigPoly g2 = differentiate(g, 2);
      for (int i = 0; i < 32; i++) {
        const double x = (i + 0.5) / 64.0;
        const double h = 1e-5;
        const double fd1 = oracle::central_diff1([&](double y) { return eval(g, y); }, x, h);
        const double fd2 = oracle::central_diff1([&](double y) { return eval(g1, y); }, x, h);
        CHECK(std::fabs(eval(g1, x) - fd1) <= 1e-6 * (1.0 + std::fabs(fd1)) + 1e-6);
        CHECK(std::fabs(eval(g2, x) - fd2) <= 1e-6 * (1.0 + std::fabs(fd2)) + 1e-5);
      }
    }
}

TEST_CASE("eval at rational points") {
  const TrigPoly gp = build_g({1, Sign::plus});
  const TrigPoly gm = build_g({1, Sign::minus});
  CHECK(eval(gp, 0.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(eval(gm, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eval(gp, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("G is nonnegative everywhere (a squared modulus)") {
  for (int k = 0; k <= 4; k++)
    for (Sign s : {Sign::plus, Sign::minus}) {
      const TrigPoly g = build_g({k, s});
      for (int i = 0; i <= 256; i++) CHECK(eval(g, i / 512.0) >= -1e-12);
    }
}

TEST_CASE("to_upoly reproduces the four displayed reductions") {
  CHECK(coeffs_equal(to_upoly(build_g({1, Sign::plus})).coeffs(), {1, -4, 4, 8}));
  CHECK(coeffs_equal(to_upoly(build_g({1, Sign::minus})).coeffs(), {5, 8, -4, -8}));
  CHECK(coeffs_equal(to_upoly(build_g({2, Sign::plus})).coeffs(), {5, -4, -16, 8, 16}));
  CHECK(coeffs_equal(to_upoly(build_g({2, Sign::minus})).coeffs(), {1, 8, 16, -8, -16}));
  CHECK(coeffs_equal(to_upoly(TrigPoly::constant(3.0)).coeffs(), {3}));
  CHECK_THROWS_AS(to_upoly(differentiate(build_g({1, Sign::plus}), 1)), std::invalid_argument);
}

TEST_CASE("Chebyshev reduction agrees with direct evaluation for k <= 8") {
  for (int k = 0; k <= 8; k++)
    for (Sign s : {Sign::plus, Sign::minus}) {
      const TrigPoly g = build_g({k, s});
      const UPoly up = to_upoly(g);
      for (int i = 0; i < 64; i++) {
        const double x = (i + 0.37) / 64.0;
        const double via_u = eval(up, std::cos(2 * kPi * x));
        const double direct = eval(g, x);
        CHECK(std::fabs(via_u - direct) <= 1e-12 * (1.0 + std::fabs(direct)));
      }
    }
}

TEST_CASE("Parseval means are exact in coefficient arithmetic") {
  for (int k : {1, 2}) {
    const TrigPoly gp = build_g({k, Sign::plus});
    const TrigPoly gm = build_g({k, Sign::minus});
    CHECK(mean_value(gp) == 3.0);
    CHECK(mean_value(gm) == 3.0);
    CHECK(mean_value(power(gp, 2)) == 15.0);
    CHECK(mean_value(power(gm, 2)) == 15.0);
    // means agree exactly through m = k+1
    for (int m = 1; m <= k + 1; m++)
      CHECK(mean_value(power(gp, m)) == mean_value(power(gm, m)));
  }
  CHECK(mean_value(power(build_g({2, Sign::plus}), 3)) == 93.0);
  CHECK(mean_value(power(build_g({2, Sign::minus}), 3)) == 93.0);
}

TEST_CASE("multiply is commutative and mean of a square is the weighted coefficient sum") {
  std::mt19937 rng(271828);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 20; trial++) {
    const int deg = 1 + static_cast<int>(rng() % 4);
    Eigen::ArrayXd c(deg + 1), sn(deg);
    for (int i = 0; i <= deg; i++) c[i] = coeff(rng);
    for (int i = 0; i < deg; i++) sn[i] = coeff(rng);
    const TrigPoly p(c, sn, 0);
    Eigen::ArrayXd c2(3), s2(2);
    c2 << coeff(rng), coeff(rng), coeff(rng);
    s2 << coeff(rng), coeff(rng);
    const TrigPoly q(c2, s2, 0);

    const TrigPoly pq = multiply(p, q), qp = multiply(q, p);
    CHECK(((pq.cos_coeffs() - qp.cos_coeffs()).abs() < 1e-14).all());
    CHECK(((pq.sin_coeffs() - qp.sin_coeffs()).abs() < 1e-14).all());

    double want = c[0] * c[0];
    for (int m = 1; m <= deg; m++) want += 0.5 * (c[m] * c[m] + sn[m - 1] * sn[m - 1]);
    CHECK(mean_value(multiply(p, p)) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("coefficient norms reproduce the trivial sup-norm bounds bit-for-bit") {
  CHECK(coeff_norm(build_g({1, Sign::plus})) == 9.0);
  CHECK(coeff_norm(build_g({1, Sign::minus})) == 9.0);
  CHECK(coeff_norm(differentiate(build_g({1, Sign::plus}), 1)) == 24.0 * std::pow(kPi, 1));
  CHECK(coeff_norm(differentiate(build_g({2, Sign::plus}), 2)) == 208.0 * std::pow(kPi, 2));
  CHECK(coeff_norm(differentiate(build_g({2, Sign::minus}), 2)) == 208.0 * std::pow(kPi, 2));
  CHECK(coeff_norm(TrigPoly::constant(0.0)) == 0.0);
}

TEST_CASE("multiply handles sine cross terms: squared derivative is even") {
  const TrigPoly g1 = differentiate(build_g({2, Sign::minus}), 1);
  const TrigPoly sq = multiply(g1, g1);
  CHECK(!sq.has_sine_part());
  CHECK(sq.pi_power() == 2);
  for (int i = 0; i < 16; i++) {
    const double x = (i + 0.21) / 16.0;
    const double want = eval(g1, x) * eval(g1, x);
    CHECK(eval(sq, x) == doctest::Approx(want).epsilon(1e-11));
  }
}
