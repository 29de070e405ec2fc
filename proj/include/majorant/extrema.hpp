#pragma once

#include "majorant/interval.hpp"
#include "majorant/uexpr.hpp"

namespace majorant {

// One-sided certified bound on an interval. For a max query: certified_bound
// is a rigorous upper bound for sup f, witness_value a rigorous lower bound
// attained near witness_point, so sup f lies in [witness_value, certified_bound].
struct BoundResult {
  double certified_bound = 0.0;
  double witness_point = 0.0;
  double witness_value = 0.0;
  long subdivisions = 0;
  bool converged = false;
};

struct SearchLimits {
  int max_depth = 60;
  long max_boxes = 4'000'000;
};

// Interval branch-and-bound with outward rounding and midpoint witnesses;
// subdivides while (upper bound - best witness) > tol. Throws DomainViolation
// when a sqrt/division domain problem survives to the depth cap; returns
// converged=false with the best bounds so far when the budget runs out.
BoundResult certified_max(const UExpr& e, Interval domain, double tol, SearchLimits limits = {});
BoundResult certified_min(const UExpr& e, Interval domain, double tol, SearchLimits limits = {});

// Gap target relative to the bound's magnitude (with a tiny absolute floor).
BoundResult certified_max_rel(const UExpr& e, Interval domain, double rel_tol, SearchLimits limits = {});
BoundResult certified_min_rel(const UExpr& e, Interval domain, double rel_tol, SearchLimits limits = {});

// Certified C with numerator <= C * denominator pointwise on the domain,
// rounded up to the requested granularity (0 keeps the raw certified bound).
// Pre: denominator provably > 0 on the domain.
double comparison_constant(const UExpr& numerator, const UExpr& denominator, Interval domain,
                           double tol, double granularity = 0.0);

}  // namespace majorant
