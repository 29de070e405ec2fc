#include "majorant/kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "majorant/quadrature.hpp"

namespace majorant {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Published majorant for G^xi over the k=2 expansion range, part of the
// remainder error model (see bound_h_sup).
constexpr double kSupPowMajorantK2 = 273.0;

std::mutex cache_mutex;

Interval log_interval(double v) {
  const double l = std::log(v);
  return {step_down(step_down(l)), step_up(step_up(l))};
}

// Upper bound for b^e with b > 0, outward arithmetic.
double pow_upper(double b, double e) {
  if (e == 0.0) return 1.0;
  Interval lb = log_interval(b);
  Interval el = Interval(e) * lb;
  return exp(el).hi;
}

}  // namespace

const CasePolys& case_polys(const CaseId& c) {
  static std::map<std::pair<int, int>, CasePolys> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(c.k, c.sign == Sign::plus ? 1 : 0);
  auto it = cache.find(key);
  if (it == cache.end()) {
    TrigPoly g = build_g(c);
    CasePolys polys{g, differentiate(g, 1), differentiate(g, 2)};
    it = cache.emplace(key, std::move(polys)).first;
  }
  return it->second;
}

namespace {

UExpr upoly_expr(const TrigPoly& p) { return UExpr::poly(to_upoly(p)); }

// G'^2 as a function of u (even in x): square via trig multiplication.
UExpr gp_squared_expr(const CaseId& c) {
  const CasePolys& polys = case_polys(c);
  return upoly_expr(multiply(polys.gp, polys.gp));
}

KernelBounds compute_case_bounds(int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("case_bounds: supported for k in {1, 2}");
  KernelBounds b;
  b.k = k;
  const CaseId plus{k, Sign::plus}, minus{k, Sign::minus};
  const CasePolys& pp = case_polys(plus);
  const CasePolys& pm = case_polys(minus);
  const Interval dom{-1.0, 1.0};

  b.sup_g = coeff_norm(pp.g);  // 9, exact
  b.gdd_norm = (Interval(pp.gdd.cos_coeffs().abs().sum()) * pi_power_interval(2)).hi;

  b.min_g_plus = certified_min_rel(upoly_expr(pp.g), dom, 1e-8).certified_bound;
  b.min_g_minus = certified_min_rel(upoly_expr(pm.g), dom, 1e-8).certified_bound;
  b.g_floor = std::min(b.min_g_plus, b.min_g_minus);

  b.c1_plus = comparison_constant(gp_squared_expr(plus), upoly_expr(pp.g), dom, 1e-4, 100.0);
  b.c1_minus = comparison_constant(gp_squared_expr(minus), upoly_expr(pm.g), dom, 1e-4, 100.0);
  b.c1 = std::max(b.c1_plus, b.c1_minus);

  if (k == 1) {
    b.c2_plus = comparison_constant(UExpr::abs(upoly_expr(pp.gdd)), upoly_expr(pp.g), dom, 1e-4, 100.0);
    b.c2_minus = comparison_constant(UExpr::abs(upoly_expr(pm.gdd)), upoly_expr(pm.g), dom, 1e-4, 100.0);
    const double norm = (Interval(pp.gp.sin_coeffs().abs().sum()) * pi_power_interval(1)).hi;
    b.gp_norm = b.gp_norm_plus = b.gp_norm_minus = norm;  // 24 pi
  } else {
    // Cancellation bound: |G'+| <= 8 pi sup sqrt(w)(|5-6w| + 8 sqrt(1-w)|1-2w|),
    // |G'-| <= 16 pi sup sqrt(w)(|2-3w| + 4 sqrt(1-w)|1-2w|), w = sin^2(2 pi x).
    const UExpr w = UExpr::variable();
    const UExpr root_w = UExpr::sqrt(w);
    const UExpr root_1mw = UExpr::sqrt(1.0 - w);
    const UExpr arg_plus = root_w * (UExpr::abs(5.0 - 6.0 * w) + 8.0 * root_1mw * UExpr::abs(1.0 - 2.0 * w));
    const UExpr arg_minus = root_w * (UExpr::abs(2.0 - 3.0 * w) + 4.0 * root_1mw * UExpr::abs(1.0 - 2.0 * w));
    const Interval wdom{0.0, 1.0};
    const double sup_plus = certified_max(arg_plus, wdom, 1e-8).certified_bound;
    const double sup_minus = certified_max(arg_minus, wdom, 1e-8).certified_bound;
    b.gp_norm_plus = (Interval(8.0) * pi_interval() * Interval(sup_plus)).hi;
    b.gp_norm_minus = (Interval(16.0) * pi_interval() * Interval(sup_minus)).hi;
    b.gp_norm = std::max(b.gp_norm_plus, b.gp_norm_minus);

    const UExpr ggp = upoly_expr(multiply(pp.gdd, pp.g));
    const UExpr ggm = upoly_expr(multiply(pm.gdd, pm.g));
    b.gddg_max_plus = certified_max_rel(ggp, dom, 1e-9).certified_bound;
    b.gddg_min_plus = certified_min_rel(ggp, dom, 1e-9).certified_bound;
    b.gddg_max_minus = certified_max_rel(ggm, dom, 1e-9).certified_bound;
    b.gddg_min_minus = certified_min_rel(ggm, dom, 1e-9).certified_bound;
    b.gddg_max = std::max(b.gddg_max_plus, b.gddg_max_minus);
    b.gddg_min = std::min(b.gddg_min_plus, b.gddg_min_minus);
  }
  return b;
}

}  // namespace

const KernelBounds& case_bounds(int k) {
  static std::map<int, KernelBounds> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  KernelBounds b = compute_case_bounds(k);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(k, std::move(b)).first->second;
}

double h_eval(const KernelSpec& spec, double x) {
  const double g = eval(case_polys(spec.case_id).g, x);
  double r = std::pow(g, spec.t);
  if (spec.j > 0) {
    const double lg = std::log(g);
    for (int i = 0; i < spec.j; i++) r *= lg;
  }
  return r;
}

namespace {

// log^m G with the convention that negative powers only ever appear with a
// zero coefficient; they contribute nothing.
double log_pow(double lg, int m) {
  if (m < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < m; i++) r *= lg;
  return r;
}

}  // namespace

double h_x(const KernelSpec& spec, double x) {
  const CasePolys& polys = case_polys(spec.case_id);
  const double g = eval(polys.g, x), gp = eval(polys.gp, x);
  const double lg = std::log(g);
  const double t = spec.t;
  const int j = spec.j;
  return std::pow(g, t - 1) * gp * (t * log_pow(lg, j) + j * log_pow(lg, j - 1));
}

double h_xx(const KernelSpec& spec, double x) {
  const CasePolys& polys = case_polys(spec.case_id);
  const double g = eval(polys.g, x), gp = eval(polys.gp, x), gdd = eval(polys.gdd, x);
  const double lg = std::log(g);
  const double t = spec.t;
  const int j = spec.j;
  const double term1 = gdd * std::pow(g, t - 1) * (t * log_pow(lg, j) + j * log_pow(lg, j - 1));
  const double term2 = gp * gp * std::pow(g, t - 2) *
                       (t * (t - 1) * log_pow(lg, j) + j * (2 * t - 1) * log_pow(lg, j - 1) +
                        static_cast<double>(j) * (j - 1) * log_pow(lg, j - 2));
  return term1 + term2;
}

namespace {

// Certified max of the A/B-split majorants over the log-range variable.
//   psi(u) = C1 e^{-(t-1)u} u^{j-2} |t(t-1)u^2 - j(2t-1)u + j(j-1)|   (G <= 1)
//   phi(u) = ||G'||^2 e^{(t-2)u} u^{j-2} (t(t-1)u^2 + j(2t-1)u + j(j-1))  (G > 1)
double q_bound(const KernelBounds& cb, double t, int j, double gp2_coeff_int, double tol) {
  const UExpr u = UExpr::variable();
  const double a2 = t * (t - 1);
  const double a1 = j * (2 * t - 1);
  const double a0 = static_cast<double>(j) * (j - 1);
  const UExpr upow = UExpr::int_pow(u, j - 2);
  const UExpr psi = UExpr::constant(cb.c1) * UExpr::exp(UExpr::constant(-(t - 1)) * u) * upow *
                    UExpr::abs(a2 * (u * u) - a1 * u + UExpr::constant(a0));
  const UExpr phi = UExpr::poly(UPoly{(Eigen::ArrayXd(1) << gp2_coeff_int).finished(), 2}) *
                    UExpr::exp(UExpr::constant(t - 2) * u) * upow *
                    (a2 * (u * u) + a1 * u + UExpr::constant(a0));
  const double a_hi = step_up(-std::log(cb.g_floor));   // G <= 1 branch: u = -log G
  const double b_hi = step_up(std::log(cb.sup_g));      // G > 1 branch: u = log G
  const double psi_max = certified_max(psi, Interval(0.0, a_hi), tol).certified_bound;
  const double phi_max = certified_max(phi, Interval(0.0, b_hi), tol).certified_bound;
  return std::max(psi_max, phi_max);
}

double bound_h_xx_family(const KernelBounds& cb, double t, int j, double gp2_coeff_int) {
  // Trivial first term ||G''|| G^(t-1) |log G|^(j-1) (t log G + j), all factors
  // maximized at G = sup_G simultaneously.
  const Interval l9 = log_interval(cb.sup_g);
  const Interval gpow(t == 1.5 ? 3.0 : 27.0);  // 9^(t-1), exact for the two families
  const Interval trivial = Interval(cb.gdd_norm) * gpow * pow_int(l9, j - 1) *
                           (Interval(static_cast<double>(j)) + Interval(t) * l9);
  const double tol = cb.k == 1 ? 1e-3 : 1.0;
  return trivial.hi + q_bound(cb, t, j, gp2_coeff_int, tol);
}

double bound_h_xx_endpoint_k1(const KernelBounds& cb) {
  // t=1, j=1: H'' = G''(log G + 1) + G'^2/G.
  const Interval l9 = log_interval(9.0);
  return (Interval(cb.gdd_norm) * (l9 + Interval(1.0))).hi + cb.c1;
}

double bound_h_xx_endpoint_k2(const KernelBounds& cb, int j) {
  // Three-branch estimates for H''_{2,j}: {G>=1, G''>0}, {G>=1, G''<=0}, {G<1}.
  const Interval l9 = log_interval(9.0);
  const Interval lfloor = Interval(step_up(-std::log(cb.g_floor)));
  const Interval gp2 = Interval(cb.gp_norm) * Interval(cb.gp_norm);
  const Interval ggmax(std::max(0.0, cb.gddg_max));
  const Interval ggabsmin(std::fabs(cb.gddg_min));
  if (j == 1) {
    // H'' = G''G (2 log G + 1) + G'^2 (2 log G + 3)
    const Interval f1 = Interval(2.0) * l9 + Interval(1.0);
    const Interval f2 = Interval(2.0) * l9 + Interval(3.0);
    const double b1 = (ggmax * f1 + gp2 * f2).hi;
    const double b2 = std::max((ggabsmin * f1).hi, (gp2 * f2).hi);
    const double b3 = (Interval(cb.gdd_norm) * (Interval(2.0) * lfloor - Interval(1.0))).hi +
                      cb.c1 * std::max(3.0, (Interval(2.0) * lfloor - Interval(3.0)).hi);
    return std::max({b1, b2, b3});
  }
  // j = 2: H'' = G''G log G (2 log G + 2) + G'^2 (2 log^2 G + 6 log G + 2)
  const Interval f1 = l9 * (Interval(2.0) * l9 + Interval(2.0));
  const Interval f2 = Interval(2.0) * l9 * l9 + Interval(6.0) * l9 + Interval(2.0);
  const double b1 = (ggmax * f1 + gp2 * f2).hi;
  const double b2 = std::max((ggabsmin * f1).hi, (gp2 * f2).hi);
  // |2w^2 - 6w + 2| on w in [0, lfloor]: vertex value 2.5 dominates both ends.
  const double brace_max = std::max(
      2.5, std::max(2.0, std::fabs((Interval(2.0) * lfloor * lfloor - Interval(6.0) * lfloor +
                                    Interval(2.0)).lo)));
  const double b3 = (Interval(cb.gdd_norm) * lfloor * (Interval(2.0) * lfloor - Interval(2.0))).hi +
                    cb.c1 * brace_max;
  return std::max({b1, b2, b3});
}

double exploratory_bound(const KernelSpec& spec) {
  // Non-certified: grid max * 1.1, for section-5 style exploration only.
  const int n = 8192;
  double best = 0.0;
  for (int i = 0; i <= n; i++) {
    const double x = 0.5 * i / n;
    best = std::max(best, std::fabs(h_xx(spec, x)));
  }
  return 1.1 * best;
}

}  // namespace

double bound_h_xx(const KernelSpec& spec, bool exploratory) {
  const int k = spec.case_id.k;
  if (k == 1) {
    if (spec.t == 1.5 && spec.j >= 3 && spec.j <= 10)
      return bound_h_xx_family(case_bounds(1), 1.5, spec.j, 576.0);
    if (spec.t == 1.0 && spec.j == 1) return bound_h_xx_endpoint_k1(case_bounds(1));
  } else if (k == 2) {
    if (spec.t == 2.5 && spec.j >= 4 && spec.j <= 11)
      return bound_h_xx_family(case_bounds(2), 2.5, spec.j, 1024.0);
    if (spec.t == 2.0 && (spec.j == 1 || spec.j == 2))
      return bound_h_xx_endpoint_k2(case_bounds(2), spec.j);
  }
  if (exploratory) return exploratory_bound(spec);
  throw std::invalid_argument("bound_h_xx: spec outside the certified families (t=" +
                              std::to_string(spec.t) + ", j=" + std::to_string(spec.j) +
                              ", k=" + std::to_string(k) + "); use the exploratory fallback");
}

double bound_h_sup(int k, double t_lo, double t_hi, int m) {
  if (m < 0) throw std::invalid_argument("bound_h_sup: m must be >= 0");
  if (!(t_lo <= t_hi)) throw std::invalid_argument("bound_h_sup: empty range");
  const KernelBounds& cb = case_bounds(k);
  double g_pow = pow_upper(cb.sup_g, t_hi);
  if (k == 2) g_pow = std::min(g_pow, kSupPowMajorantK2);
  const Interval labs = Interval(0.0) - log_interval(cb.g_floor);  // |log g_floor|
  const double right = (Interval(g_pow) * pow_int(log_interval(cb.sup_g), m)).hi;
  if (m == 0) return right;
  const double left = (Interval(pow_upper(1.0 / cb.g_floor, -t_lo)) * pow_int(labs, m)).hi;
  double best = std::max(left, right);
  // Interior critical point u = e^(-m/xi) of u^xi |log u|^m, only relevant
  // when it lands inside the range.
  if (std::exp(-static_cast<double>(m) / t_hi) > cb.g_floor) {
    const Interval ratio(static_cast<double>(m) / t_lo);
    const double interior = (exp(Interval(-static_cast<double>(m))) * pow_int(ratio, m)).hi;
    best = std::max(best, interior);
  }
  return best;
}

double d_deriv_estimate(int j, double t, int k, long n) {
  const KernelSpec plus{{k, Sign::plus}, t, j};
  const KernelSpec minus{{k, Sign::minus}, t, j};
  const double gm = midpoint_sum([&](double x) { return h_eval(minus, x); }, n);
  const double gp = midpoint_sum([&](double x) { return h_eval(plus, x); }, n);
  return gm - gp;
}

std::vector<NamedQuery> bound_inventory(int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("bound_inventory: k in {1, 2}");
  const CaseId plus{k, Sign::plus}, minus{k, Sign::minus};
  const Interval dom{-1.0, 1.0};
  std::vector<NamedQuery> rows;

  auto add = [&](const std::string& name, UExpr e, Interval d, bool is_max, double ref,
                 bool ref_upper) {
    NamedQuery q{name, std::move(e), d, is_max, ref, ref_upper, 0.0, 0.0, false};
    BoundResult r = is_max ? certified_max_rel(q.expr, d, 1e-8) : certified_min_rel(q.expr, d, 1e-8);
    q.certified = r.certified_bound;
    q.witness = r.witness_value;
    q.ok = ref_upper ? (q.certified <= ref) : (q.certified > ref);
    rows.push_back(std::move(q));
  };

  const CasePolys& pp = case_polys(plus);
  const CasePolys& pm = case_polys(minus);
  if (k == 1) {
    add("min G+", upoly_expr(pp.g), dom, false, std::exp(-1.0), false);
    add("min G-", upoly_expr(pm.g), dom, false, 1.0 / 9.0, false);
    add("C1+ (G'^2/G)", gp_squared_expr(plus) / upoly_expr(pp.g), dom, true, 1300.0, true);
    add("C1- (G'^2/G)", gp_squared_expr(minus) / upoly_expr(pm.g), dom, true, 1100.0, true);
    add("C2+ (|G''|/G)", UExpr::abs(upoly_expr(pp.gdd)) / upoly_expr(pp.g), dom, true, 2200.0, true);
    add("C2- (|G''|/G)", UExpr::abs(upoly_expr(pm.gdd)) / upoly_expr(pm.g), dom, true, 4000.0, true);
  } else {
    add("min G+", upoly_expr(pp.g), dom, false, 0.25, false);
    add("min G-", upoly_expr(pm.g), dom, false, 1.0 / 16.0, false);
    add("C1+ (G'^2/G)", gp_squared_expr(plus) / upoly_expr(pp.g), dom, true, 2300.0, true);
    add("C1- (G'^2/G)", gp_squared_expr(minus) / upoly_expr(pm.g), dom, true, 2600.0, true);
    add("max G''G+", upoly_expr(multiply(pp.gdd, pp.g)), dom, true, 2820.0, true);
    add("min G''G+", upoly_expr(multiply(pp.gdd, pp.g)), dom, false, -18500.0, false);
    add("max G''G-", upoly_expr(multiply(pm.gdd, pm.g)), dom, true, 2710.0, true);
    add("min G''G-", upoly_expr(multiply(pm.gdd, pm.g)), dom, false, -14800.0, false);
    const UExpr w = UExpr::variable();
    const UExpr root_w = UExpr::sqrt(w);
    const UExpr root_1mw = UExpr::sqrt(1.0 - w);
    add("sup sqrt(w)(|5-6w|+8sqrt(1-w)|1-2w|)",
        root_w * (UExpr::abs(5.0 - 6.0 * w) + 8.0 * root_1mw * UExpr::abs(1.0 - 2.0 * w)),
        Interval(0.0, 1.0), true, 29.12 / 8.0, true);
    add("sup sqrt(w)(|2-3w|+4sqrt(1-w)|1-2w|)",
        root_w * (UExpr::abs(2.0 - 3.0 * w) + 4.0 * root_1mw * UExpr::abs(1.0 - 2.0 * w)),
        Interval(0.0, 1.0), true, 29.12 / 16.0, true);
  }
  return rows;
}

}  // namespace majorant
