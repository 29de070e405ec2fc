#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "majorant/kernels.hpp"

namespace majorant {

class UnsupportedCase : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One Taylor term: budgeted error delta_j, quadrature target eta_j =
// delta_j j! 2^j / 2, planned node count, and the computed coefficient.
struct ErrorBudgetRow {
  int j = 0;
  double delta_j = 0.0;
  double eta_j = 0.0;
  long n_j = 0;
  double dbar_j = 0.0;
  double hxx_bound = 0.0;  // certified ||H''|| bound the plan came from
};

struct TaylorBudget {
  int m = 0;
  double center = 0.0;
  int n = 0;
  std::vector<double> deltas;
  double remainder_allotment = 0.0;
};
// The budgets the per-case proofs run with (k in {1, 2}).
TaylorBudget taylor_budget(int k);

// Certified claim: sup over [center-1/2, center+1/2] of |d^(m) - P_n| <= total_delta.
struct TaylorCertificate {
  int k = 0;
  int m = 0;
  double center = 0.0;
  int n = 0;
  std::vector<ErrorBudgetRow> rows;
  double sup_h_bound = 0.0;          // bound for max ||H_{xi, n+m+1}|| over the expansion range
  int log_power = 0;                 // n + m + 1
  double remainder_delta = 0.0;      // computed Taylor remainder bound
  double remainder_allotment = 0.0;  // budgeted ceiling for it
  double total_delta = 0.0;          // sum of deltas + remainder_delta
};

// Throws std::runtime_error when the computed remainder exceeds its
// allotment or a row cannot be planned.
TaylorCertificate build_taylor_certificate(int k, int m, double center, int n,
                                           const std::vector<double>& deltas,
                                           double remainder_allotment);

struct SignCertificate {
  enum class Verdict { negative_on_interval, failed };
  std::vector<double> shifted_poly;     // p about the center: dbar_j / j!, + total_delta at j=0
  std::vector<double> endpoint_derivs;  // p^(i)(left end) for i = 0..n-3
  double tail_leading = 0.0;            // leading coefficient dbar_n / 2 of p^(n-2)
  double tail_discriminant = 0.0;       // dbar_{n-1}^2 - 2 dbar_{n-2} dbar_n
  Verdict verdict = Verdict::failed;
  // -1 when the verdict holds; else the first failing endpoint index, or
  // n-2 for the leading coefficient, n-1 for the discriminant.
  int failed_index = -1;
};

// Negative endpoint derivatives plus an everywhere-negative quadratic tail
// imply p < 0 on the half-line from the left end. Requires n >= 2.
SignCertificate certify_negative(const TaylorCertificate& cert);

// Model of the computational error of evaluating G^t log^j G with 15
// significant digits: Delta_c <= (2j+10) 1e-14 3^j sup_G^t, coarse form
// 32 * 1e-14 * 3^(6+j). Passes when the coarse form stays below 1e-4 * target.
struct LedgerResult {
  double delta_exact = 0.0;
  double delta_coarse = 0.0;
  double margin = 0.0;  // delta_coarse / target
  bool pass = false;
};
LedgerResult fp_error_ledger(int j, double t, double target);

// One certified fact with its numeric evidence inlined; `data` carries every
// bound needed to re-check the fact offline.
struct Fact {
  std::string id;
  std::string statement;
  bool pass = false;
  nlohmann::json data;
};

// d^(j0)(t0) > threshold, with quadrature planned so that the two-integral
// error stays below the threshold.
Fact endpoint_positivity(int k, int j0, double t0, double threshold);

// Grid sign check of the y-derivative of the factored k=0 integrand plus the
// endpoint ordering of the marginal integrals.
std::vector<Fact> verify_k0(const std::vector<double>& p_samples, int grid_density);

struct ProofReport {
  int k = 0;
  bool proven = false;
  std::vector<Fact> facts;
  nlohmann::json provenance;
};

// k = 0: monotonicity verification; k = 1: Parseval anchors + d'(1) > 0 +
// order-7 certificate at 3/2 + negativity of d'''; k = 2: anchors + d'(2),
// d''(2) > 0 + certificate at 5/2 + negativity of d^(4). Other k are
// rejected (UnsupportedCase) pointing to the exploratory tabulator.
ProofReport prove_case(int k);

}  // namespace majorant
