#pragma once

#include <string>
#include <vector>

#include "majorant/extrema.hpp"
#include "majorant/trigpoly.hpp"

namespace majorant {

// H_{t,j,+-}(x) = G^t(x) log^j G(x), natural logarithm.
struct KernelSpec {
  CaseId case_id;
  double t = 1.0;
  int j = 0;
};

// Cached exact polynomials for one case: G and its first two x-derivatives.
struct CasePolys {
  TrigPoly g, gp, gdd;
};
const CasePolys& case_polys(const CaseId& c);

// Certified one-sided bounds for a gap index k (both signs), the inputs to
// every H''/H sup estimate. All certified values are rounded outward.
struct KernelBounds {
  int k = 0;
  double sup_g = 0.0;        // coefficient-norm bound, attained at x = 0 for the + sign
  double min_g_plus = 0.0;   // certified lower bounds for min G
  double min_g_minus = 0.0;
  double g_floor = 0.0;      // min over signs
  double gdd_norm = 0.0;     // upper bound for ||G''||
  double gp_norm = 0.0;      // upper bound for ||G'|| (improved cancellation bound for k = 2)
  double gp_norm_plus = 0.0;
  double gp_norm_minus = 0.0;
  double c1_plus = 0.0;      // G'^2 <= C1 G, rounded to granularity 100
  double c1_minus = 0.0;
  double c1 = 0.0;           // max over signs
  // k = 1 only: |G''| <= C2 G
  double c2_plus = 0.0;
  double c2_minus = 0.0;
  // k = 2 only: range of G'' G
  double gddg_max_plus = 0.0;
  double gddg_min_plus = 0.0;
  double gddg_max_minus = 0.0;
  double gddg_min_minus = 0.0;
  double gddg_max = 0.0;
  double gddg_min = 0.0;
};
const KernelBounds& case_bounds(int k);  // k in {1, 2}

double h_eval(const KernelSpec& spec, double x);
double h_x(const KernelSpec& spec, double x);
double h_xx(const KernelSpec& spec, double x);

// Certified upper bound for ||H''_{t,j,+-}||_inf. Supported: the Taylor
// families (k=1: t=3/2, j=3..10; k=2: t=5/2, j=4..11) and the endpoint cases
// (k=1: t=1,j=1; k=2: t=2,j in {1,2}). Anything else is rejected unless
// `exploratory` is set, which switches to a non-certified grid max * 1.1.
double bound_h_xx(const KernelSpec& spec, bool exploratory = false);

// max over xi in [t_lo, t_hi] of max_{u in [g_floor, sup_g]} u^xi |log u|^m,
// by endpoint candidates plus an interior-critical-point guard. For k = 2 the
// G^xi factor is capped by the fixed majorant 273 of the proof's error model.
double bound_h_sup(int k, double t_lo, double t_hi, int m);

// Riemann-sum estimator of d^(j)(t) = g_-^(j)(t) - g_+^(j)(t).
double d_deriv_estimate(int j, double t, int k, long n);

// Named certified extremum queries for one case, with the reference constants
// the run is checked against (used by the bounds dump and the test oracles).
struct NamedQuery {
  std::string name;
  UExpr expr;
  Interval domain;
  bool is_max = true;            // else min
  double reference = 0.0;        // target value from the published analysis
  bool reference_is_upper = true;  // max: certified <= ref; min: certified > ref
  double certified = 0.0;
  double witness = 0.0;
  bool ok = false;
};
std::vector<NamedQuery> bound_inventory(int k);

}  // namespace majorant
