#include "majorant/trigpoly.hpp"

#include <cmath>
#include <stdexcept>

namespace majorant {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TrigPoly::TrigPoly(Eigen::ArrayXd cos_coeffs, Eigen::ArrayXd sin_coeffs, int pi_power)
    : cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)), pi_power_(pi_power) {
  if (cos_.size() == 0) cos_ = Eigen::ArrayXd::Zero(1);
  if (sin_.size() + 1 < cos_.size()) {
    Eigen::ArrayXd s = Eigen::ArrayXd::Zero(cos_.size() - 1);
    s.head(sin_.size()) = sin_;
    sin_ = std::move(s);
  } else if (sin_.size() + 1 > cos_.size()) {
    Eigen::ArrayXd c = Eigen::ArrayXd::Zero(sin_.size() + 1);
    c.head(cos_.size()) = cos_;
    cos_ = std::move(c);
  }
}

TrigPoly TrigPoly::constant(double c) {
  Eigen::ArrayXd a(1);
  a << c;
  return TrigPoly(std::move(a), Eigen::ArrayXd::Zero(0), 0);
}

double TrigPoly::sin_coeff(int m) const {
  if (m < 1) throw std::invalid_argument("sin_coeff: frequency must be >= 1");
  return m <= degree() ? sin_[m - 1] : 0.0;
}

bool TrigPoly::has_sine_part() const { return (sin_ != 0.0).any(); }

UPoly::UPoly(Eigen::ArrayXd coeffs, int pi_power) : coeffs_(std::move(coeffs)), pi_power_(pi_power) {
  if (coeffs_.size() == 0) coeffs_ = Eigen::ArrayXd::Zero(1);
}

TrigPoly build_g(const CaseId& c) {
  if (c.k < 0) throw std::invalid_argument("build_g: k must be >= 0");
  const int deg = c.k + 2;
  Eigen::ArrayXd cos = Eigen::ArrayXd::Zero(deg + 1);
  const double s = sign_value(c.sign);
  cos[0] = 3.0;
  cos[1] += 2.0;
  cos[c.k + 1] += 2.0 * s;
  cos[c.k + 2] += 2.0 * s;
  return TrigPoly(std::move(cos), Eigen::ArrayXd::Zero(deg), 0);
}

TrigPoly differentiate(const TrigPoly& p, int order) {
  if (order < 0) throw std::invalid_argument("differentiate: order must be >= 0");
  TrigPoly r = p;
  for (int it = 0; it < order; it++) {
    const int deg = r.degree();
    Eigen::ArrayXd cos = Eigen::ArrayXd::Zero(deg + 1);
    Eigen::ArrayXd sin = Eigen::ArrayXd::Zero(deg);
    for (int m = 1; m <= deg; m++) {
      // d/dx [a cos(2pi m x) + b sin(2pi m x)] = 2pi m (b cos - a sin)
      cos[m] = 2.0 * m * r.sin_coeffs()[m - 1];
      sin[m - 1] = -2.0 * m * r.cos_coeffs()[m];
    }
    r = TrigPoly(std::move(cos), std::move(sin), r.pi_power() + 1);
  }
  return r;
}

double eval(const TrigPoly& p, double x) {
  double acc = p.cos_coeffs()[0];
  for (int m = 1; m <= p.degree(); m++) {
    const double c = p.cos_coeffs()[m];
    const double s = p.sin_coeffs()[m - 1];
    if (c == 0.0 && s == 0.0) continue;
    const double ang = 2.0 * kPi * m * x;
    if (c != 0.0) acc += c * std::cos(ang);
    if (s != 0.0) acc += s * std::sin(ang);
  }
  return acc * std::pow(kPi, p.pi_power());
}

UPoly to_upoly(const TrigPoly& p) {
  if (p.has_sine_part()) throw std::invalid_argument("to_upoly: polynomial has a sine part");
  const int deg = p.degree();
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(deg + 1);
  // Chebyshev recurrence T_m = 2 u T_{m-1} - T_{m-2}; integer coefficients.
  Eigen::ArrayXd tprev = Eigen::ArrayXd::Zero(deg + 1);  // T_0
  tprev[0] = 1.0;
  out += p.cos_coeffs()[0] * tprev;
  if (deg == 0) return UPoly(std::move(out), p.pi_power());
  Eigen::ArrayXd tcur = Eigen::ArrayXd::Zero(deg + 1);  // T_1
  tcur[1] = 1.0;
  out += p.cos_coeffs()[1] * tcur;
  for (int m = 2; m <= deg; m++) {
    Eigen::ArrayXd tnext = Eigen::ArrayXd::Zero(deg + 1);
    tnext.tail(deg) = 2.0 * tcur.head(deg);
    tnext -= tprev;
    out += p.cos_coeffs()[m] * tnext;
    tprev = std::move(tcur);
    tcur = std::move(tnext);
  }
  return UPoly(std::move(out), p.pi_power());
}

TrigPoly multiply(const TrigPoly& p, const TrigPoly& q) {
  const int deg = p.degree() + q.degree();
  Eigen::ArrayXd cos = Eigen::ArrayXd::Zero(deg + 1);
  Eigen::ArrayXd sin = Eigen::ArrayXd::Zero(deg);
  auto add_cos = [&](int m, double v) { cos[std::abs(m)] += v; };
  auto add_sin = [&](int m, double v) {
    if (m > 0) sin[m - 1] += v;
    else if (m < 0) sin[-m - 1] -= v;
  };
  for (int a = 0; a <= p.degree(); a++) {
    const double ca = p.cos_coeffs()[a];
    const double sa = a >= 1 ? p.sin_coeffs()[a - 1] : 0.0;
    if (ca == 0.0 && sa == 0.0) continue;
    for (int b = 0; b <= q.degree(); b++) {
      const double cb = q.cos_coeffs()[b];
      const double sb = b >= 1 ? q.sin_coeffs()[b - 1] : 0.0;
      if (cb == 0.0 && sb == 0.0) continue;
      // product-to-sum identities
      if (ca != 0.0 && cb != 0.0) {
        add_cos(a - b, 0.5 * ca * cb);
        add_cos(a + b, 0.5 * ca * cb);
      }
      if (sa != 0.0 && sb != 0.0) {
        add_cos(a - b, 0.5 * sa * sb);
        add_cos(a + b, -0.5 * sa * sb);
      }
      if (sa != 0.0 && cb != 0.0) {
        add_sin(a + b, 0.5 * sa * cb);
        add_sin(a - b, 0.5 * sa * cb);
      }
      if (ca != 0.0 && sb != 0.0) {
        add_sin(a + b, 0.5 * ca * sb);
        add_sin(b - a, 0.5 * ca * sb);
      }
    }
  }
  return TrigPoly(std::move(cos), std::move(sin), p.pi_power() + q.pi_power());
}

TrigPoly power(const TrigPoly& p, int m) {
  if (m < 0) throw std::invalid_argument("power: exponent must be >= 0");
  TrigPoly r = TrigPoly::constant(1.0);
  for (int i = 0; i < m; i++) r = multiply(r, p);
  return r;
}

double mean_value(const TrigPoly& p) {
  return p.cos_coeffs()[0] * std::pow(kPi, p.pi_power());
}

double coeff_norm(const TrigPoly& p) {
  const double s = p.cos_coeffs().abs().sum() + p.sin_coeffs().abs().sum();
  return s * std::pow(kPi, p.pi_power());
}

double eval(const UPoly& p, double u) {
  double acc = 0.0;
  for (int i = p.degree(); i >= 0; i--) acc = acc * u + p.coeffs()[i];
  return acc * std::pow(kPi, p.pi_power());
}

UPoly multiply(const UPoly& p, const UPoly& q) {
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(p.degree() + q.degree() + 1);
  for (int i = 0; i <= p.degree(); i++)
    for (int j = 0; j <= q.degree(); j++) out[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return UPoly(std::move(out), p.pi_power() + q.pi_power());
}

Interval eval_interval(const UPoly& p, Interval u) {
  Interval acc(0.0);
  for (int i = p.degree(); i >= 0; i--) acc = acc * u + Interval(p.coeffs()[i]);
  if (p.pi_power() != 0) acc = acc * pi_power_interval(p.pi_power());
  return acc;
}

}  // namespace majorant
