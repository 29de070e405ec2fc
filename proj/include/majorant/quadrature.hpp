#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace majorant {

// Midpoint-rule plan on the fixed interval [0, 1/2]: node count plus the
// certified error bound min(sup|f''|/(192 N^2), sup|f'|/(16 N)).
struct RiemannPlan {
  enum class Source { second_derivative, first_derivative };
  long nodes = 1;
  double error_bound = 0.0;
  Source source = Source::second_derivative;
};

namespace detail {
template <class Term>
double pairwise_sum(const Term& term, long begin, long count) {
  if (count <= 16) {
    double s = 0.0;
    for (long i = 0; i < count; i++) s += term(begin + i);
    return s;
  }
  const long half = count / 2;
  return pairwise_sum(term, begin, half) + pairwise_sum(term, begin + half, count - half);
}
}  // namespace detail

// (1/(2N)) * sum_{n=1..N} f((n-1/2)/(2N)); fixed-order pairwise reduction
// keeps the result identical across runs and platforms with the same libm.
template <class F>
double midpoint_sum(F&& f, long n) {
  if (n < 1) throw std::invalid_argument("midpoint_sum: N must be >= 1");
  auto term = [&](long i) { return f((2.0 * i + 1.0) / (4.0 * n)); };
  return detail::pairwise_sum(term, 0, n) / (2.0 * n);
}

// min(sup_f2/(192 N^2), sup_f1/(16 N)); an absent norm counts as +infinity.
double error_bound(double sup_f2, std::optional<double> sup_f1, long n);

// Smallest N with sup_f2/(192 N^2) < eta (strict).
RiemannPlan plan_steps(double sup_f2, double eta);

}  // namespace majorant
