#include "majorant/certify.hpp"

#include <cmath>
#include <limits>

#include "majorant/quadrature.hpp"

namespace majorant {

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; i++) r *= i;
  return r;
}

}  // namespace

TaylorBudget taylor_budget(int k) {
  if (k == 1)
    return {3, 1.5, 7, {0.05, 0.0604, 0.044, 0.02, 0.008, 0.002, 0.0004, 0.0002}, 0.046};
  if (k == 2)
    return {4, 2.5, 7, {0.13, 0.15, 0.1, 0.05, 0.015, 0.004, 0.0008, 0.0002}, 0.34};
  throw UnsupportedCase("taylor_budget: no budget for k=" + std::to_string(k));
}

TaylorCertificate build_taylor_certificate(int k, int m, double center, int n,
                                           const std::vector<double>& deltas,
                                           double remainder_allotment) {
  if (static_cast<int>(deltas.size()) != n + 1)
    throw std::invalid_argument("build_taylor_certificate: need n+1 deltas");
  TaylorCertificate cert;
  cert.k = k;
  cert.m = m;
  cert.center = center;
  cert.n = n;
  cert.remainder_allotment = remainder_allotment;
  cert.log_power = n + m + 1;

  for (int j = 0; j <= n; j++) {
    ErrorBudgetRow row;
    row.j = j;
    row.delta_j = deltas[j];
    row.eta_j = deltas[j] * factorial(j) * std::pow(2.0, j) / 2.0;
    row.hxx_bound = bound_h_xx({{k, Sign::plus}, center, j + m});
    RiemannPlan plan = plan_steps(row.hxx_bound, row.eta_j);
    row.n_j = plan.nodes;
    row.dbar_j = d_deriv_estimate(j + m, center, k, row.n_j);
    cert.rows.push_back(row);
  }

  cert.sup_h_bound = bound_h_sup(k, center - 0.5, center + 0.5, cert.log_power);
  const double denom = factorial(n + 1) * std::pow(2.0, n + 2);
  cert.remainder_delta = (Interval(2.0) * Interval(cert.sup_h_bound) * Interval(1.0 / denom)).hi;
  if (!(cert.remainder_delta <= cert.remainder_allotment))
    throw std::runtime_error("build_taylor_certificate: remainder bound " +
                             std::to_string(cert.remainder_delta) + " exceeds its allotment " +
                             std::to_string(remainder_allotment));
  double sum = 0.0;
  for (double d : deltas) sum += d;
  cert.total_delta = sum + cert.remainder_delta;
  return cert;
}

namespace {

// P^(i) at offset s from the center, coefficients dbar_j / j!.
double taylor_deriv_at(const std::vector<ErrorBudgetRow>& rows, int n, int i, double s) {
  double r = 0.0;
  for (int j = n; j >= i; j--) r = r * s + rows[j].dbar_j / factorial(j - i);
  return r;
}

}  // namespace

SignCertificate certify_negative(const TaylorCertificate& cert) {
  if (cert.n < 2) throw std::invalid_argument("certify_negative: chain needs n >= 2");
  SignCertificate sc;
  const int n = cert.n;
  for (int j = 0; j <= n; j++)
    sc.shifted_poly.push_back(cert.rows[j].dbar_j / factorial(j) + (j == 0 ? cert.total_delta : 0.0));
  const double s = -0.5;  // left endpoint offset
  sc.failed_index = -1;
  for (int i = 0; i <= n - 3; i++) {
    double v = taylor_deriv_at(cert.rows, n, i, s) + (i == 0 ? cert.total_delta : 0.0);
    sc.endpoint_derivs.push_back(v);
    if (!(v < 0.0) && sc.failed_index < 0) sc.failed_index = i;
  }
  sc.tail_leading = cert.rows[n].dbar_j / 2.0;
  sc.tail_discriminant =
      cert.rows[n - 1].dbar_j * cert.rows[n - 1].dbar_j - 2.0 * cert.rows[n - 2].dbar_j * cert.rows[n].dbar_j;
  if (sc.failed_index < 0 && !(sc.tail_leading < 0.0)) sc.failed_index = n - 2;
  if (sc.failed_index < 0 && !(sc.tail_discriminant < 0.0)) sc.failed_index = n - 1;
  sc.verdict = sc.failed_index < 0 ? SignCertificate::Verdict::negative_on_interval
                                   : SignCertificate::Verdict::failed;
  return sc;
}

LedgerResult fp_error_ledger(int j, double t, double target) {
  if (t < 1.0 || t > 3.0 || j < 0 || j > 11)
    throw std::invalid_argument("fp_error_ledger: model covers 1 <= t <= 3, j <= 11");
  LedgerResult r;
  r.delta_exact = (2.0 * j + 10.0) * 1e-14 * std::pow(3.0, j) * std::pow(9.0, t);
  r.delta_coarse = 32.0 * 1e-14 * std::pow(3.0, 6 + j);
  r.margin = target > 0.0 ? r.delta_coarse / target : 0.0;
  r.pass = target > 0.0 && r.delta_coarse < 1e-4 * target;
  return r;
}

namespace {

json row_json(const ErrorBudgetRow& r) {
  return json{{"j", r.j},         {"delta", r.delta_j},     {"eta", r.eta_j},
              {"nodes", r.n_j},   {"dbar", r.dbar_j},       {"hxx_bound", r.hxx_bound}};
}

}  // namespace

Fact endpoint_positivity(int k, int j0, double t0, double threshold) {
  Fact f;
  f.id = "endpoint-positivity-d" + std::to_string(j0) + "-t" + std::to_string(static_cast<int>(t0));
  f.statement = "d^(" + std::to_string(j0) + ")(" + std::to_string(t0) + ") > " +
                std::to_string(threshold) + " certified by midpoint sums";
  const double hxx = bound_h_xx({{k, Sign::plus}, t0, j0});
  const double eta = threshold / 2.0;
  RiemannPlan plan = plan_steps(hxx, eta);
  const double estimate = d_deriv_estimate(j0, t0, k, plan.nodes);
  const double total_error = 2.0 * plan.error_bound;
  LedgerResult ledger = fp_error_ledger(j0, t0, eta);
  const double margin = estimate - threshold;
  f.pass = total_error < threshold && margin > 0.0 && ledger.pass;
  f.data = json{{"kind", "endpoint-sign"},
                {"k", k},
                {"j", j0},
                {"t", t0},
                {"threshold", threshold},
                {"hxx_bound", hxx},
                {"nodes", plan.nodes},
                {"per_integral_error", plan.error_bound},
                {"total_error", total_error},
                {"estimate", estimate},
                {"margin", margin},
                {"ledger", {{"coarse", ledger.delta_coarse}, {"margin", ledger.margin}, {"pass", ledger.pass}}}};
  return f;
}

namespace {

struct K0Derivative {
  double value;
  double a, b;  // the two moduli
};

// dPhi/dy for Phi = |2 e(y/2) cos(2 pi x) + 1|^p + |2 e(y/2) cos(2 pi x) - 1|^p.
K0Derivative k0_dphi_dy(double p, double x, double y) {
  const double c = std::cos(2.0 * kPi * x);
  const double cy = std::cos(kPi * y);
  const double a = std::sqrt(4.0 * c * c + 4.0 * c * cy + 1.0);
  const double b = std::sqrt(4.0 * c * c - 4.0 * c * cy + 1.0);
  const double v = -2.0 * p * kPi * std::sin(kPi * y) * c *
                   (std::pow(a, p - 2.0) - std::pow(b, p - 2.0));
  return {v, a, b};
}

}  // namespace

std::vector<Fact> verify_k0(const std::vector<double>& p_samples, int grid_density) {
  if (grid_density < 64) throw std::invalid_argument("verify_k0: grid_density must be >= 64");
  std::vector<Fact> facts;
  for (double p : p_samples) {
    if (!(p > 0.0) || p == 2.0)
      throw std::invalid_argument("verify_k0: p samples must lie in (0,2) or (2,inf)");
    const double expected_sign = p > 2.0 ? -1.0 : 1.0;
    long violations = 0;
    double min_abs = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_density; i++) {
      const double x = -0.25 + 0.5 * (i + 0.5) / grid_density;
      for (int jj = 0; jj < grid_density; jj++) {
        const double y = 0.5 * (jj + 0.5) / grid_density;
        const double v = k0_dphi_dy(p, x, y).value;
        if (v * expected_sign <= 0.0) violations++;
        min_abs = std::min(min_abs, std::fabs(v));
      }
    }
    Fact mono;
    mono.id = "k0-monotone-p" + std::to_string(p);
    mono.statement = "sign of dPhi/dy constant on (-1/4,1/4) x (0,1/2) grid for p=" + std::to_string(p);
    mono.pass = violations == 0;
    mono.data = json{{"kind", "k0-monotone"}, {"p", p},
                     {"grid_density", grid_density}, {"violations", violations},
                     {"expected_sign", expected_sign}, {"min_abs_derivative", min_abs}};
    facts.push_back(mono);

    const double d = d_deriv_estimate(0, p / 2.0, 0, 1 << 16);
    Fact order;
    order.id = "k0-order-p" + std::to_string(p);
    order.statement = p > 2.0 ? "f_p(0) > f_p(1/2) for p=" + std::to_string(p)
                              : "f_p(1/2) > f_p(0) for p=" + std::to_string(p);
    order.pass = p > 2.0 ? d < 0.0 : d > 0.0;
    order.data = json{{"kind", "k0-order"}, {"p", p}, {"difference", d},
                      {"expected_sign", p > 2.0 ? -1.0 : 1.0}, {"nodes", 1 << 16}};
    facts.push_back(order);
  }
  // p = 2 anchor: Parseval makes f_2 constant in y.
  const double d2 = d_deriv_estimate(0, 1.0, 0, 1 << 16);
  Fact anchor;
  anchor.id = "k0-parseval-p2";
  anchor.statement = "f_2(0) == f_2(1/2) within 1e-9";
  anchor.pass = std::fabs(d2) < 1e-9;
  anchor.data = json{{"kind", "exact-equal"}, {"lhs", d2}, {"rhs", 0.0}, {"tol", 1e-9}};
  facts.push_back(anchor);
  return facts;
}

namespace {

Fact parseval_anchor(int k, int m, double expected) {
  const double mp = mean_value(power(build_g({k, Sign::plus}), m));
  const double mm = mean_value(power(build_g({k, Sign::minus}), m));
  Fact f;
  f.id = "parseval-mean-m" + std::to_string(m);
  f.statement = "mean(G+^" + std::to_string(m) + ") = mean(G-^" + std::to_string(m) +
                ") = " + std::to_string(expected) + " exactly";
  f.pass = mp == expected && mm == expected;
  f.data = json{{"kind", "exact-pair"}, {"plus", mp}, {"minus", mm}, {"expected", expected}};
  return f;
}

Fact bounds_fact(int k) {
  const KernelBounds& cb = case_bounds(k);
  Fact f;
  f.id = "certified-bounds";
  f.statement = "certified G bounds feeding every estimate (inputs, embedded for re-checking)";
  // The floating-point model needs |log G| <= 3, i.e. a floor above e^-3.
  f.pass = cb.g_floor > std::exp(-3.0) && cb.sup_g == 9.0;
  f.data = json{{"kind", "certified-bounds"},
                {"min_g_plus", cb.min_g_plus},
                {"min_g_minus", cb.min_g_minus},
                {"g_floor", cb.g_floor},
                {"sup_g", cb.sup_g},
                {"gdd_norm", cb.gdd_norm},
                {"gp_norm", cb.gp_norm},
                {"c1_plus", cb.c1_plus},
                {"c1_minus", cb.c1_minus}};
  if (k == 1) {
    f.data["c2_plus"] = cb.c2_plus;
    f.data["c2_minus"] = cb.c2_minus;
  } else {
    f.data["gddg_max"] = cb.gddg_max;
    f.data["gddg_min"] = cb.gddg_min;
  }
  return f;
}

Fact certificate_fact(const TaylorCertificate& cert) {
  Fact f;
  f.id = "taylor-certificate";
  f.statement = "order-" + std::to_string(cert.n) + " Taylor certificate of d^(" +
                std::to_string(cert.m) + ") at " + std::to_string(cert.center) +
                " with total error band " + std::to_string(cert.total_delta);
  f.pass = cert.remainder_delta <= cert.remainder_allotment;
  json rows = json::array();
  double delta_sum = 0.0;
  for (const auto& r : cert.rows) {
    rows.push_back(row_json(r));
    delta_sum += r.delta_j;
  }
  f.data = json{{"kind", "taylor-certificate"},
                {"k", cert.k},
                {"m", cert.m},
                {"center", cert.center},
                {"n", cert.n},
                {"rows", rows},
                {"delta_sum", delta_sum},
                {"sup_h_bound", cert.sup_h_bound},
                {"log_power", cert.log_power},
                {"remainder_delta", cert.remainder_delta},
                {"remainder_allotment", cert.remainder_allotment},
                {"total_delta", cert.total_delta}};
  return f;
}

Fact sign_fact(const TaylorCertificate& cert, const SignCertificate& sc) {
  Fact f;
  f.id = "sign-certificate";
  f.statement = "P_n + total_delta negative on [" + std::to_string(cert.center - 0.5) + ", " +
                std::to_string(cert.center + 0.5) + "]";
  f.pass = sc.verdict == SignCertificate::Verdict::negative_on_interval;
  json dbar = json::array();
  for (const auto& r : cert.rows) dbar.push_back(r.dbar_j);
  f.data = json{{"kind", "sign-certificate"},
                {"center", cert.center},
                {"total_delta", cert.total_delta},
                {"dbar", dbar},
                {"endpoint_derivs", sc.endpoint_derivs},
                {"tail_leading", sc.tail_leading},
                {"tail_discriminant", sc.tail_discriminant},
                {"failed_index", sc.failed_index},
                {"verdict", f.pass ? "negative_on_interval" : "failed"}};
  return f;
}

Fact ledger_fact(int k, const TaylorCertificate& cert, const std::vector<Fact>& endpoint_facts) {
  Fact f;
  f.id = "fp-ledger";
  f.statement = "computational-error model below 1e-4 of every quadrature target";
  json rows = json::array();
  bool pass = true;
  for (const auto& r : cert.rows) {
    LedgerResult lr = fp_error_ledger(r.j + cert.m, cert.center, r.eta_j);
    pass = pass && lr.pass;
    rows.push_back(json{{"log_power", r.j + cert.m},
                        {"target", r.eta_j},
                        {"coarse", lr.delta_coarse},
                        {"margin", lr.margin},
                        {"pass", lr.pass}});
  }
  for (const auto& ef : endpoint_facts) {
    rows.push_back(json{{"log_power", ef.data["j"]},
                        {"target", ef.data["threshold"].get<double>() / 2.0},
                        {"coarse", ef.data["ledger"]["coarse"]},
                        {"margin", ef.data["ledger"]["margin"]},
                        {"pass", ef.data["ledger"]["pass"]}});
    pass = pass && ef.data["ledger"]["pass"].get<bool>();
  }
  f.pass = pass;
  f.data = json{{"kind", "fp-ledger"}, {"rows", rows}, {"k", k}};
  return f;
}

json provenance_json() {
  return json{{"schema", "majorant-proof/1"},
              {"generator", "majorant 1.0.0"},
              {"tolerances",
               {{"extrema_rel", 1e-8},
                {"comparison_granularity", 100.0},
                {"table_bound_abs", 1e-3},
                {"ledger_relative_rule", 1e-4}}}};
}

// The Rolle/Lagrange gluing: with the endpoint zeros, the endpoint derivative
// signs, and the certified concavity, d > 0 on the open interval follows. The
// interior points it quantifies over are existential and never computed.
Fact gluing_fact(int k, const std::vector<Fact>& facts) {
  Fact f;
  f.id = "interval-positivity";
  if (k == 1)
    f.statement = "d(1)=d(2)=0, d'(1)>0 and d''' < 0 on [1,2] force d > 0 on (1,2)";
  else
    f.statement = "d(2)=d(3)=0, d'(2)>0, d''(2)>0 and d'''' < 0 on [2,3] force d > 0 on (2,3)";
  json premises = json::array();
  f.pass = true;
  for (const Fact& prem : facts) {
    premises.push_back(prem.id);
    f.pass = f.pass && prem.pass;
  }
  f.data = json{{"kind", "derived-logic"}, {"premises", premises}};
  return f;
}

}  // namespace

ProofReport prove_case(int k) {
  ProofReport report;
  report.k = k;
  report.provenance = provenance_json();

  if (k == 0) {
    report.facts = verify_k0({0.5, 1.0, 1.5, 2.5, 3.0, 5.0}, 96);
  } else if (k == 1 || k == 2) {
    report.facts.push_back(parseval_anchor(k, k, k == 1 ? 3.0 : 15.0));
    report.facts.push_back(parseval_anchor(k, k + 1, k == 1 ? 15.0 : 93.0));
    report.facts.push_back(bounds_fact(k));
    std::vector<Fact> endpoints;
    if (k == 1) {
      endpoints.push_back(endpoint_positivity(1, 1, 1.0, 0.09));
    } else {
      endpoints.push_back(endpoint_positivity(2, 1, 2.0, 0.034));
      endpoints.push_back(endpoint_positivity(2, 2, 2.0, 0.13));
    }
    for (const auto& f : endpoints) report.facts.push_back(f);
    const TaylorBudget budget = taylor_budget(k);
    TaylorCertificate cert = build_taylor_certificate(k, budget.m, budget.center, budget.n,
                                                      budget.deltas, budget.remainder_allotment);
    report.facts.push_back(certificate_fact(cert));
    report.facts.push_back(sign_fact(cert, certify_negative(cert)));
    report.facts.push_back(ledger_fact(k, cert, endpoints));
    report.facts.push_back(gluing_fact(k, report.facts));
  } else {
    throw UnsupportedCase("prove_case: only k in {0, 1, 2} is certified; use the tabulate command "
                          "with --exploratory for larger k");
  }

  report.proven = true;
  for (const auto& f : report.facts) report.proven = report.proven && f.pass;
  return report;
}

}  // namespace majorant
