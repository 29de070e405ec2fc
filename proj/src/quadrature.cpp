#include "majorant/quadrature.hpp"

#include <algorithm>
#include <limits>

namespace majorant {

double error_bound(double sup_f2, std::optional<double> sup_f1, long n) {
  if (sup_f2 < 0.0 || (sup_f1 && *sup_f1 < 0.0))
    throw std::invalid_argument("error_bound: norms must be >= 0");
  if (n < 1) throw std::invalid_argument("error_bound: N must be >= 1");
  const double nn = static_cast<double>(n);
  const double second = sup_f2 / (192.0 * nn * nn);
  const double first = sup_f1 ? *sup_f1 / (16.0 * nn) : std::numeric_limits<double>::infinity();
  return std::min(second, first);
}

RiemannPlan plan_steps(double sup_f2, double eta) {
  if (!(sup_f2 > 0.0) || !(eta > 0.0))
    throw std::invalid_argument("plan_steps: sup_f2 and eta must be > 0");
  long n = static_cast<long>(std::floor(std::sqrt(sup_f2 / (192.0 * eta)))) - 1;
  if (n < 1) n = 1;
  while (!(sup_f2 / (192.0 * static_cast<double>(n) * static_cast<double>(n)) < eta)) n++;
  return {n, sup_f2 / (192.0 * static_cast<double>(n) * static_cast<double>(n)),
          RiemannPlan::Source::second_derivative};
}

}  // namespace majorant
