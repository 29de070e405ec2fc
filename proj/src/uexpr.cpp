#include "majorant/uexpr.hpp"

#include <cmath>

namespace majorant {

struct UExpr::Node {
  enum class Kind { kConstant, kVariable, kPoly, kAdd, kSub, kMul, kDiv, kAbs, kSqrt, kExp, kPowInt };
  Kind kind;
  double value = 0.0;
  int ipow = 0;
  UPoly poly;
  std::shared_ptr<const Node> a, b;
};

namespace {
using Node = UExpr::Node;
using Kind = UExpr::Node::Kind;

std::shared_ptr<const Node> make(Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}
}  // namespace

UExpr UExpr::constant(double c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConstant;
  n->value = c;
  return UExpr(n);
}

UExpr UExpr::variable() { return UExpr(make(Kind::kVariable)); }

UExpr UExpr::poly(UPoly p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPoly;
  n->poly = std::move(p);
  return UExpr(n);
}

UExpr UExpr::abs(UExpr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAbs;
  n->a = e.node();
  return UExpr(n);
}

UExpr UExpr::sqrt(UExpr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSqrt;
  n->a = e.node();
  return UExpr(n);
}

UExpr UExpr::exp(UExpr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kExp;
  n->a = e.node();
  return UExpr(n);
}

UExpr UExpr::int_pow(UExpr e, int p) {
  if (p < 0) throw std::invalid_argument("int_pow: exponent must be >= 0");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPowInt;
  n->a = e.node();
  n->ipow = p;
  return UExpr(n);
}

UExpr UExpr::operator-() const { return constant(-1.0) * *this; }

UExpr operator+(const UExpr& a, const UExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAdd;
  n->a = a.node();
  n->b = b.node();
  return UExpr(n);
}
UExpr operator-(const UExpr& a, const UExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSub;
  n->a = a.node();
  n->b = b.node();
  return UExpr(n);
}
UExpr operator*(const UExpr& a, const UExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kMul;
  n->a = a.node();
  n->b = b.node();
  return UExpr(n);
}
UExpr operator/(const UExpr& a, const UExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kDiv;
  n->a = a.node();
  n->b = b.node();
  return UExpr(n);
}

namespace {

double eval_point(const Node& n, double u) {
  switch (n.kind) {
    case Kind::kConstant: return n.value;
    case Kind::kVariable: return u;
    case Kind::kPoly: return eval(n.poly, u);
    case Kind::kAdd: return eval_point(*n.a, u) + eval_point(*n.b, u);
    case Kind::kSub: return eval_point(*n.a, u) - eval_point(*n.b, u);
    case Kind::kMul: return eval_point(*n.a, u) * eval_point(*n.b, u);
    case Kind::kDiv: return eval_point(*n.a, u) / eval_point(*n.b, u);
    case Kind::kAbs: return std::fabs(eval_point(*n.a, u));
    case Kind::kSqrt: return std::sqrt(std::max(0.0, eval_point(*n.a, u)));
    case Kind::kExp: return std::exp(eval_point(*n.a, u));
    case Kind::kPowInt: {
      double v = eval_point(*n.a, u), r = 1.0;
      for (int i = 0; i < n.ipow; i++) r *= v;
      return r;
    }
  }
  return 0.0;
}

UExpr::Enclosure fail(const char* reason) { return {false, Interval{}, reason}; }

UExpr::Enclosure enclose(const Node& n, Interval box) {
  switch (n.kind) {
    case Kind::kConstant: return {true, Interval(n.value), nullptr};
    case Kind::kVariable: return {true, box, nullptr};
    case Kind::kPoly: return {true, eval_interval(n.poly, box), nullptr};
    case Kind::kAdd: {
      auto a = enclose(*n.a, box); if (!a.ok) return a;
      auto b = enclose(*n.b, box); if (!b.ok) return b;
      return {true, a.value + b.value, nullptr};
    }
    case Kind::kSub: {
      auto a = enclose(*n.a, box); if (!a.ok) return a;
      auto b = enclose(*n.b, box); if (!b.ok) return b;
      return {true, a.value - b.value, nullptr};
    }
    case Kind::kMul: {
      auto a = enclose(*n.a, box); if (!a.ok) return a;
      auto b = enclose(*n.b, box); if (!b.ok) return b;
      return {true, a.value * b.value, nullptr};
    }
    case Kind::kDiv: {
      auto a = enclose(*n.a, box); if (!a.ok) return a;
      auto b = enclose(*n.b, box); if (!b.ok) return b;
      if (b.value.contains_zero()) return fail("division by interval containing zero");
      return {true, div_nonzero(a.value, b.value), nullptr};
    }
    case Kind::kAbs: {
      auto a = enclose(*n.a, box); if (!a.ok) return a;
      return {true, abs(a.value), nullptr};
    }
    case Kind::kSqrt: {
      auto a = enclose(*n.a, box); if (!a.ok) return a;
      // Tolerate rounding-level negatives from outward rounding; anything
      // materially negative is a true domain violation.
      const double slack = 1e-12 * std::max(1.0, std::fabs(a.value.hi));
      if (a.value.hi < 0.0 || a.value.lo < -slack) return fail("sqrt of possibly-negative interval");
      return {true, sqrt_nonneg(a.value), nullptr};
    }
    case Kind::kExp: {
      auto a = enclose(*n.a, box); if (!a.ok) return a;
      return {true, exp(a.value), nullptr};
    }
    case Kind::kPowInt: {
      auto a = enclose(*n.a, box); if (!a.ok) return a;
      return {true, pow_int(a.value, n.ipow), nullptr};
    }
  }
  return fail("unknown node");
}

}  // namespace

double UExpr::operator()(double u) const { return eval_point(*node_, u); }

UExpr::Enclosure UExpr::enclosure(Interval box) const { return enclose(*node_, box); }

}  // namespace majorant
