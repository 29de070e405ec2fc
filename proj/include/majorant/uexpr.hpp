#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "majorant/interval.hpp"
#include "majorant/trigpoly.hpp"

namespace majorant {

// A query was rejected because the expression is not evaluable on some
// subinterval (sqrt of a possibly-negative argument, division by an interval
// containing zero).
class DomainViolation : public std::domain_error {
 public:
  DomainViolation(const std::string& what, Interval where)
      : std::domain_error(what + " on [" + std::to_string(where.lo) + ", " +
                          std::to_string(where.hi) + "]"),
        where_(where) {}
  Interval where() const { return where_; }

 private:
  Interval where_;
};

// Immutable expression tree in one variable u. Interval evaluation yields
// rigorous enclosures; abs/sqrt/exp use exact monotone extensions.
class UExpr {
 public:
  struct Node;

  static UExpr constant(double c);
  static UExpr variable();
  static UExpr poly(UPoly p);
  static UExpr abs(UExpr e);
  static UExpr sqrt(UExpr e);
  static UExpr exp(UExpr e);
  static UExpr int_pow(UExpr e, int n);

  UExpr operator-() const;

  // Point evaluation (plain double arithmetic, for display and witnesses).
  double operator()(double u) const;

  struct Enclosure {
    bool ok = true;
    Interval value;
    const char* reason = nullptr;  // set when !ok
  };
  // Rigorous range enclosure over `box`; ok=false when the box hits a
  // sqrt/division domain problem that subdivision may still resolve.
  Enclosure enclosure(Interval box) const;

  const std::shared_ptr<const Node>& node() const { return node_; }

  friend UExpr operator+(const UExpr& a, const UExpr& b);
  friend UExpr operator-(const UExpr& a, const UExpr& b);
  friend UExpr operator*(const UExpr& a, const UExpr& b);
  friend UExpr operator/(const UExpr& a, const UExpr& b);

 private:
  explicit UExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

UExpr operator+(const UExpr& a, const UExpr& b);
UExpr operator-(const UExpr& a, const UExpr& b);
UExpr operator*(const UExpr& a, const UExpr& b);
UExpr operator/(const UExpr& a, const UExpr& b);

inline UExpr operator*(double c, const UExpr& e) { return UExpr::constant(c) * e; }
inline UExpr operator+(double c, const UExpr& e) { return UExpr::constant(c) + e; }
inline UExpr operator-(double c, const UExpr& e) { return UExpr::constant(c) - e; }

}  // namespace majorant
