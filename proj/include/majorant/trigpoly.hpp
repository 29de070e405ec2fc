#pragma once

#include <Eigen/Core>

#include "majorant/interval.hpp"

namespace majorant {

enum class Sign { plus, minus };

inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// Gap index k >= 0 plus the sign choice in 1 + e(x) +/- e((k+2)x).
struct CaseId {
  int k = 1;
  Sign sign = Sign::plus;
};

// Finite expansion pi^p * (a_0 + sum_m a_m cos(2 pi m x) + sum_m b_m sin(2 pi m x)).
// Coefficients are kept as exact machine reals (small integers and dyadics)
// with the power of pi factored out, so that trivial coefficient norms like
// 24*pi come out bit-reproducible.
class TrigPoly {
 public:
  TrigPoly() : cos_(Eigen::ArrayXd::Zero(1)), sin_(Eigen::ArrayXd::Zero(0)) {}
  TrigPoly(Eigen::ArrayXd cos_coeffs, Eigen::ArrayXd sin_coeffs, int pi_power = 0);

  static TrigPoly constant(double c);

  int degree() const { return static_cast<int>(cos_.size()) - 1; }
  int pi_power() const { return pi_power_; }

  double cos_coeff(int m) const { return m <= degree() ? cos_[m] : 0.0; }
  // The zero-frequency sine slot does not exist; m >= 1.
  double sin_coeff(int m) const;

  const Eigen::ArrayXd& cos_coeffs() const { return cos_; }
  const Eigen::ArrayXd& sin_coeffs() const { return sin_; }

  bool has_sine_part() const;

 private:
  Eigen::ArrayXd cos_;  // index m = 0..degree
  Eigen::ArrayXd sin_;  // index m-1 for frequency m = 1..degree
  int pi_power_;
};

// Polynomial in u = cos(2 pi x), ascending powers, scaled by pi^p.
class UPoly {
 public:
  UPoly() : coeffs_(Eigen::ArrayXd::Zero(1)) {}
  explicit UPoly(Eigen::ArrayXd coeffs, int pi_power = 0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int pi_power() const { return pi_power_; }
  const Eigen::ArrayXd& coeffs() const { return coeffs_; }

 private:
  Eigen::ArrayXd coeffs_;
  int pi_power_;
};

// |1 + e(x) +/- e((k+2)x)|^2 as a cosine polynomial; coefficients at
// coincident frequencies are summed (k = 0 merges at frequency 1).
TrigPoly build_g(const CaseId& c);

// Term-wise x-derivative, `order` times; order 0 is the identity.
TrigPoly differentiate(const TrigPoly& p, int order = 1);

double eval(const TrigPoly& p, double x);

// Chebyshev reduction cos(2 pi m x) -> T_m(u); rejects polynomials with a
// sine part (throws std::invalid_argument).
UPoly to_upoly(const TrigPoly& p);

TrigPoly multiply(const TrigPoly& p, const TrigPoly& q);
TrigPoly power(const TrigPoly& p, int m);

// Constant Fourier coefficient, equals the mean over a period.
double mean_value(const TrigPoly& p);

// Sum of absolute coefficients times pi^p: a valid sup-norm bound.
double coeff_norm(const TrigPoly& p);

double eval(const UPoly& p, double u);
UPoly multiply(const UPoly& p, const UPoly& q);

// Rigorous range enclosure by Horner with interval arithmetic; integer
// coefficients are exact, the pi^p factor is applied as an enclosure.
Interval eval_interval(const UPoly& p, Interval u);

}  // namespace majorant
