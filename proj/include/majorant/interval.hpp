#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace majorant {

// Closed interval [lo, hi] with outward rounding. Every arithmetic result is
// widened by one ulp per bound, which covers the half-ulp rounding of the
// underlying IEEE operation; exp/log results are widened by two ulps since
// libm only promises faithful rounding there.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double v) : lo(v), hi(v) {}
  Interval(double a, double b) : lo(a), hi(b) {}

  static Interval hull(double a, double b) { return {std::min(a, b), std::max(a, b)}; }

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
};

inline double step_down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
inline double step_up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

inline Interval widen(Interval a) { return {step_down(a.lo), step_up(a.hi)}; }

inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator+(Interval a, Interval b) { return widen({a.lo + b.lo, a.hi + b.hi}); }
inline Interval operator-(Interval a, Interval b) { return widen({a.lo - b.hi, a.hi - b.lo}); }

inline Interval operator*(Interval a, Interval b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return widen({std::min(std::min(p1, p2), std::min(p3, p4)),
                std::max(std::max(p1, p2), std::max(p3, p4))});
}

// Pre: b excludes zero.
inline Interval div_nonzero(Interval a, Interval b) {
  const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return widen({std::min(std::min(q1, q2), std::min(q3, q4)),
                std::max(std::max(q1, q2), std::max(q3, q4))});
}

inline Interval abs(Interval a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return -a;
  return {0.0, std::max(-a.lo, a.hi)};
}

// Pre: a.lo >= 0 (caller clips rounding-level negatives). sqrt is correctly
// rounded, one ulp outward suffices.
inline Interval sqrt_nonneg(Interval a) {
  return {step_down(std::sqrt(std::max(a.lo, 0.0))), step_up(std::sqrt(a.hi))};
}

inline Interval exp(Interval a) {
  double lo = std::exp(a.lo), hi = std::exp(a.hi);
  return {std::max(0.0, step_down(step_down(lo))), step_up(step_up(hi))};
}

inline Interval pow_int(Interval a, int n) {
  if (n == 0) return {1.0, 1.0};
  if (n % 2 == 0 && a.contains_zero()) {
    double m = std::max(-a.lo, a.hi);
    Interval r{0.0, 1.0};
    Interval base{0.0, m};
    for (int i = 0; i < n; i++) r = r * base;
    return {0.0, r.hi};
  }
  Interval r = a;
  for (int i = 1; i < n; i++) r = r * a;
  return r;
}

// Enclosure of pi, for coefficients stored as exact multiples of pi^p.
inline Interval pi_interval() {
  constexpr double pi = 3.14159265358979323846264338327950288;
  return {pi, step_up(pi)};
}

inline Interval pi_power_interval(int p) {
  Interval r{1.0, 1.0};
  Interval pi = pi_interval();
  for (int i = 0; i < p; i++) r = r * pi;
  return r;
}

}  // namespace majorant
