#include "majorant/report_json.hpp"

#include <cmath>
#include <fstream>

#include "majorant/quadrature.hpp"

namespace majorant {

using nlohmann::json;

json report_to_json(const ProofReport& report) {
  json facts = json::array();
  for (const auto& f : report.facts)
    facts.push_back(json{{"id", f.id}, {"statement", f.statement}, {"pass", f.pass}, {"data", f.data}});
  return json{{"schema", "majorant-proof/1"},
              {"k", report.k},
              {"verdict", report.proven ? "proven" : "not_proven"},
              {"facts", facts},
              {"provenance", report.provenance}};
}

void write_report(const ProofReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << report_to_json(report).dump(2) << "\n";
}

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; i++) r *= i;
  return r;
}

void check(bool cond, const std::string& what, std::vector<std::string>& problems) {
  if (!cond) problems.push_back(what);
}

void revalidate_fact(const json& fact, std::vector<std::string>& problems) {
  const std::string id = fact.at("id");
  const bool recorded_pass = fact.at("pass");
  const json& d = fact.at("data");
  const std::string kind = d.value("kind", "");

  auto expect_pass = [&](bool recomputed) {
    check(recomputed == recorded_pass, id + ": recorded pass flag disagrees with embedded numbers",
          problems);
  };

  if (kind == "exact-pair") {
    expect_pass(d.at("plus").get<double>() == d.at("expected").get<double>() &&
                d.at("minus").get<double>() == d.at("expected").get<double>());
  } else if (kind == "exact-equal") {
    expect_pass(std::fabs(d.at("lhs").get<double>() - d.at("rhs").get<double>()) <
                d.at("tol").get<double>());
  } else if (kind == "certified-bounds") {
    expect_pass(d.at("g_floor").get<double>() > std::exp(-3.0) &&
                d.at("sup_g").get<double>() == 9.0);
  } else if (kind == "endpoint-sign") {
    const double threshold = d.at("threshold");
    const double estimate = d.at("estimate");
    const double hxx = d.at("hxx_bound");
    const long nodes = d.at("nodes");
    const double per = hxx / (192.0 * static_cast<double>(nodes) * static_cast<double>(nodes));
    check(per < threshold / 2.0, id + ": planned nodes do not meet the per-integral target", problems);
    check(std::fabs(per - d.at("per_integral_error").get<double>()) <= 1e-12 * per,
          id + ": per-integral error does not match its inputs", problems);
    expect_pass(2.0 * per < threshold && estimate - threshold > 0.0 &&
                d.at("ledger").at("pass").get<bool>());
  } else if (kind == "taylor-certificate") {
    double delta_sum = 0.0;
    for (const auto& row : d.at("rows")) {
      const int j = row.at("j");
      const double delta = row.at("delta");
      const double eta = row.at("eta");
      check(eta == delta * factorial(j) * std::pow(2.0, j) / 2.0,
            id + ": eta identity fails at row " + std::to_string(j), problems);
      const double hxx = row.at("hxx_bound");
      const long nodes = row.at("nodes");
      check(hxx / (192.0 * static_cast<double>(nodes) * static_cast<double>(nodes)) < eta,
            id + ": node count misses the eta target at row " + std::to_string(j), problems);
      delta_sum += delta;
    }
    check(std::fabs(delta_sum - d.at("delta_sum").get<double>()) < 1e-15,
          id + ": delta sum mismatch", problems);
    const double rem = d.at("remainder_delta");
    const double total = d.at("total_delta");
    check(total == delta_sum + rem, id + ": total_delta is not delta_sum + remainder", problems);
    const int n = d.at("n");
    const double sup_h = d.at("sup_h_bound");
    const double denom = factorial(n + 1) * std::pow(2.0, n + 2);
    check(rem >= 2.0 * sup_h / denom * (1.0 - 1e-12), id + ": remainder below its formula", problems);
    expect_pass(rem <= d.at("remainder_allotment").get<double>());
  } else if (kind == "sign-certificate") {
    const std::vector<double> dbar = d.at("dbar").get<std::vector<double>>();
    const double total_delta = d.at("total_delta");
    const int n = static_cast<int>(dbar.size()) - 1;
    const double s = -0.5;
    bool all_negative = true;
    const std::vector<double> recorded = d.at("endpoint_derivs").get<std::vector<double>>();
    for (int i = 0; i <= n - 3; i++) {
      double v = 0.0;
      for (int j = n; j >= i; j--) v = v * s + dbar[j] / factorial(j - i);
      if (i == 0) v += total_delta;
      check(std::fabs(v - recorded[i]) <= 1e-9 * std::max(1.0, std::fabs(v)),
            id + ": endpoint derivative " + std::to_string(i) + " does not match its inputs",
            problems);
      all_negative = all_negative && v < 0.0;
    }
    const double leading = dbar[n] / 2.0;
    const double disc = dbar[n - 1] * dbar[n - 1] - 2.0 * dbar[n - 2] * dbar[n];
    check(std::fabs(leading - d.at("tail_leading").get<double>()) <= 1e-9 * std::fabs(leading),
          id + ": tail leading coefficient mismatch", problems);
    check(std::fabs(disc - d.at("tail_discriminant").get<double>()) <= 1e-9 * std::fabs(disc),
          id + ": tail discriminant mismatch", problems);
    expect_pass(all_negative && leading < 0.0 && disc < 0.0);
  } else if (kind == "fp-ledger") {
    bool pass = true;
    for (const auto& row : d.at("rows")) {
      const int j = row.at("log_power");
      const double coarse = 32.0 * 1e-14 * std::pow(3.0, 6 + j);
      check(std::fabs(coarse - row.at("coarse").get<double>()) <= 1e-12 * coarse,
            id + ": ledger row formula mismatch", problems);
      pass = pass && coarse < 1e-4 * row.at("target").get<double>();
    }
    expect_pass(pass);
  } else if (kind == "k0-monotone") {
    expect_pass(d.at("violations").get<long>() == 0);
  } else if (kind == "k0-order") {
    expect_pass(d.at("difference").get<double>() * d.at("expected_sign").get<double>() > 0.0);
  } else if (kind == "derived-logic") {
    // handled at the report level (needs the other facts)
  } else {
    problems.push_back(id + ": unknown fact kind '" + kind + "'");
  }
}

void revalidate_derived(const json& fact, const json& facts, std::vector<std::string>& problems) {
  const std::string id = fact.at("id");
  bool premises_hold = true;
  for (const auto& premise : fact.at("data").at("premises")) {
    bool found = false;
    for (const auto& other : facts)
      if (other.at("id") == premise) {
        found = true;
        premises_hold = premises_hold && other.at("pass").get<bool>();
      }
    if (!found) problems.push_back(id + ": premise '" + premise.get<std::string>() + "' missing");
  }
  check(premises_hold == fact.at("pass").get<bool>(),
        id + ": recorded pass flag disagrees with its premises", problems);
}

}  // namespace

RevalidationResult revalidate_report(const json& report) {
  RevalidationResult result;
  if (report.value("schema", "") != "majorant-proof/1") {
    result.problems.push_back("unknown schema");
    result.ok = false;
    return result;
  }
  bool all_pass = true;
  for (const auto& fact : report.at("facts")) {
    if (fact.at("data").value("kind", "") == "derived-logic")
      revalidate_derived(fact, report.at("facts"), result.problems);
    else
      revalidate_fact(fact, result.problems);
    all_pass = all_pass && fact.at("pass").get<bool>();
  }
  const std::string verdict = report.at("verdict");
  check(verdict == (all_pass ? "proven" : "not_proven"),
        "verdict does not follow from the recorded facts", result.problems);
  result.ok = result.problems.empty();
  return result;
}

}  // namespace majorant
