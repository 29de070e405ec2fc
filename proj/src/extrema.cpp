#include "majorant/extrema.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace majorant {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Box {
  double lo, hi;
  double ub;           // upper end of enclosure, +inf while unresolved
  int depth;
  const char* fail = nullptr;
};

struct BoxOrder {
  bool operator()(const Box& a, const Box& b) const {
    if (a.ub != b.ub) return a.ub < b.ub;
    if (a.lo != b.lo) return a.lo > b.lo;  // leftmost first on ties
    return a.hi > b.hi;
  }
};

struct MaxSearch {
  const UExpr& e;
  SearchLimits limits;
  double best_lb = -kInf;
  double best_pt = 0.0;
  long splits = 0;

  void try_witness(double x) {
    auto r = e.enclosure(Interval(x));
    if (!r.ok) return;
    if (r.value.lo > best_lb || (r.value.lo == best_lb && x < best_pt)) {
      best_lb = r.value.lo;
      best_pt = x;
    }
  }

  Box make_box(double lo, double hi, int depth, double parent_ub) {
    auto r = e.enclosure(Interval(lo, hi));
    if (!r.ok) return {lo, hi, kInf, depth, r.reason};
    // Inclusion of the child range in the parent's keeps queue tops monotone.
    return {lo, hi, std::min(r.value.hi, parent_ub), depth, nullptr};
  }
};

BoundResult run_max(const UExpr& e, Interval domain, double tol_abs, double tol_rel,
                    SearchLimits limits) {
  MaxSearch s{e, limits};
  s.best_pt = domain.lo;
  s.try_witness(domain.lo);
  s.try_witness(domain.hi);
  s.try_witness(domain.mid());

  std::priority_queue<Box, std::vector<Box>, BoxOrder> queue;
  queue.push(s.make_box(domain.lo, domain.hi, 0, kInf));

  long boxes = 1;
  auto gap_ok = [&](double ub) {
    const double gap = ub - s.best_lb;
    return gap <= tol_abs || gap <= tol_rel * std::fabs(s.best_lb);
  };

  while (!queue.empty()) {
    Box top = queue.top();
    queue.pop();
    if (top.ub <= s.best_lb) continue;  // cannot improve; pruned mass stays below best_lb
    if (top.ub < kInf && gap_ok(top.ub))
      return {top.ub, s.best_pt, s.best_lb, s.splits, true};
    if (top.depth >= limits.max_depth || boxes >= limits.max_boxes) {
      if (top.fail) throw DomainViolation(top.fail, Interval(top.lo, top.hi));
      return {top.ub, s.best_pt, s.best_lb, s.splits, false};
    }
    const double mid = 0.5 * (top.lo + top.hi);
    if (!(top.lo < mid && mid < top.hi)) {  // interval no longer splittable
      if (top.fail) throw DomainViolation(top.fail, Interval(top.lo, top.hi));
      return {top.ub, s.best_pt, s.best_lb, s.splits, false};
    }
    s.splits++;
    for (int half = 0; half < 2; half++) {
      const double a = half == 0 ? top.lo : mid;
      const double b = half == 0 ? mid : top.hi;
      Box child = s.make_box(a, b, top.depth + 1, top.ub);
      s.try_witness(0.5 * (a + b));
      queue.push(child);
      boxes++;
    }
  }
  // Everything pruned: sup equals the best witness within rounding.
  return {s.best_lb, s.best_pt, s.best_lb, s.splits, true};
}

}  // namespace

BoundResult certified_max(const UExpr& e, Interval domain, double tol, SearchLimits limits) {
  return run_max(e, domain, tol, 0.0, limits);
}

BoundResult certified_min(const UExpr& e, Interval domain, double tol, SearchLimits limits) {
  BoundResult r = certified_max(-e, domain, tol, limits);
  return {-r.certified_bound, r.witness_point, -r.witness_value, r.subdivisions, r.converged};
}

BoundResult certified_max_rel(const UExpr& e, Interval domain, double rel_tol, SearchLimits limits) {
  return run_max(e, domain, 1e-12, rel_tol, limits);
}

BoundResult certified_min_rel(const UExpr& e, Interval domain, double rel_tol, SearchLimits limits) {
  BoundResult r = certified_max_rel(-e, domain, rel_tol, limits);
  return {-r.certified_bound, r.witness_point, -r.witness_value, r.subdivisions, r.converged};
}

double comparison_constant(const UExpr& numerator, const UExpr& denominator, Interval domain,
                           double tol, double granularity) {
  BoundResult den = certified_min_rel(denominator, domain, 1e-4);
  if (!(den.certified_bound > 0.0))
    throw DomainViolation("denominator not provably positive", domain);
  BoundResult r = certified_max(numerator / denominator, domain, tol);
  double c = r.certified_bound;
  if (granularity > 0.0) c = std::ceil(c / granularity) * granularity;
  return c;
}

}  // namespace majorant
