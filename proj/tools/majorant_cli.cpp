// Command-line front end: run the certified proofs, tabulate the difference
// function d(t), emit normalized shape curves, and dump certified bounds.
//
// Exit codes: 0 success/proven, 1 a certified fact failed, 2 unsupported input.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "majorant/certify.hpp"
#include "majorant/explore.hpp"
#include "majorant/kernels.hpp"
#include "majorant/report_json.hpp"

namespace {

using majorant::Tabulation;

void write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int cmd_prove(int k, const std::string& out_path) {
  majorant::ProofReport report = majorant::prove_case(k);
  for (const auto& fact : report.facts)
    std::printf("%-4s %s\n", fact.pass ? "ok" : "FAIL", fact.id.c_str());
  std::printf("verdict: %s\n", report.proven ? "proven" : "not_proven");
  const std::string path = out_path.empty() ? ("proof_k" + std::to_string(k) + ".json") : out_path;
  majorant::write_report(report, path);
  std::printf("report: %s\n", path.c_str());
  if (!report.proven) {
    for (const auto& fact : report.facts)
      if (!fact.pass) std::fprintf(stderr, "failed fact: %s (%s)\n", fact.id.c_str(), fact.statement.c_str());
    return 1;
  }
  return 0;
}

int cmd_tabulate(int k, double t_min, double t_max, double step, double density, bool exploratory,
                 const std::string& format, const std::string& out_path) {
  Tabulation tab = majorant::tabulate(k, t_min, t_max, step, density, exploratory);
  if (format == "json")
    write_output(majorant::tabulation_json(tab).dump(2) + "\n", out_path);
  else if (format == "svg")
    write_output(majorant::tabulation_svg(tab), out_path);
  else
    write_output(majorant::tabulation_csv(tab), out_path);
  return 0;
}

int cmd_shape(const std::vector<int>& ks, double step, double density, bool exploratory,
              const std::string& format, const std::string& out_path) {
  std::vector<majorant::ShapeCurve> curves;
  for (int k : ks) {
    curves.push_back(majorant::shape_curve(k, step, density, exploratory));
    std::fprintf(stderr, "k=%d argmax s=%.4f\n", k, curves.back().argmax_s);
  }
  if (format == "json")
    write_output(majorant::shape_json(curves).dump(2) + "\n", out_path);
  else if (format == "svg")
    write_output(majorant::shape_svg(curves), out_path);
  else
    write_output(majorant::shape_csv(curves), out_path);
  return 0;
}

int cmd_bounds(int k, const std::string& format, const std::string& out_path) {
  if (k != 1 && k != 2) throw majorant::UnsupportedCase("bounds: k must be 1 or 2");
  auto rows = majorant::bound_inventory(k);
  nlohmann::json jrows = nlohmann::json::array();
  std::string text, csv = "name,certified,reference,ok\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-40s %16s %16s %4s\n", "quantity", "certified", "reference", "ok");
  text += buf;
  for (const auto& q : rows) {
    std::snprintf(buf, sizeof(buf), "%-40s %16.6f %16.6f %4s\n", q.name.c_str(), q.certified,
                  q.reference, q.ok ? "ok" : "NO");
    text += buf;
    std::snprintf(buf, sizeof(buf), "\"%s\",%.12g,%.12g,%d\n", q.name.c_str(), q.certified,
                  q.reference, q.ok ? 1 : 0);
    csv += buf;
    jrows.push_back(nlohmann::json{{"name", q.name},
                                   {"certified", q.certified},
                                   {"witness", q.witness},
                                   {"reference", q.reference},
                                   {"ok", q.ok}});
  }
  // H'' table rows for the Taylor family
  const auto budget = majorant::taylor_budget(k);
  for (int j = budget.m; j <= budget.n + budget.m; j++) {
    const double bound = majorant::bound_h_xx({{k, majorant::Sign::plus}, budget.center, j});
    const std::string name = "||H''|| bound, log power j=" + std::to_string(j);
    std::snprintf(buf, sizeof(buf), "%-40s %16.1f\n", name.c_str(), bound);
    text += buf;
    std::snprintf(buf, sizeof(buf), "\"%s\",%.12g,,\n", name.c_str(), bound);
    csv += buf;
    jrows.push_back(nlohmann::json{{"name", "hxx_bound_j" + std::to_string(j)}, {"certified", bound}});
  }
  if (format == "json")
    write_output(nlohmann::json{{"k", k}, {"rows", jrows}}.dump(2) + "\n", out_path);
  else if (format == "csv")
    write_output(csv, out_path);
  else
    write_output(text, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified counterexample engine for three-term idempotent majorant comparisons"};
  app.require_subcommand(1);

  int k = 1;
  std::vector<int> k_list;
  double t_min = 0.0, t_max = 0.0, step = 0.001, density = 0.01;
  bool have_tmin = false, have_tmax = false, exploratory = false;
  std::string out_path, format = "csv";

  auto* prove = app.add_subcommand("prove", "run the certified proof chain for one gap index k");
  prove->add_option("--k", k, "gap index (0, 1 or 2)")->required();
  prove->add_option("--out", out_path, "report path (default proof_k<k>.json)");

  auto* tab = app.add_subcommand("tabulate", "tabulate d(t) with quadrature error bounds");
  tab->add_option("--k", k, "gap index (>= 1; >= 3 needs --exploratory)")->required();
  tab->add_option("--t-min", t_min)->each([&](const std::string&) { have_tmin = true; });
  tab->add_option("--t-max", t_max)->each([&](const std::string&) { have_tmax = true; });
  tab->add_option("--step", step, "node spacing on [0,1/2]; 0.001 means N=500 nodes");
  tab->add_option("--density", density, "t-grid spacing");
  tab->add_flag("--exploratory", exploratory, "allow non-certified grid-max error bounds (k >= 3)");
  tab->add_option("--format", format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
  tab->add_option("--out", out_path, "output path (default stdout)");

  auto* shp = app.add_subcommand("shape", "normalized curves d(k+s)/max d with argmax report");
  shp->add_option("--k", k_list, "gap indices (repeatable)")->required();
  shp->add_option("--step", step);
  shp->add_option("--density", density);
  shp->add_flag("--exploratory", exploratory);
  shp->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));
  shp->add_option("--out", out_path);

  auto* bnd = app.add_subcommand("bounds", "dump certified constants next to their reference values");
  bnd->add_option("--k", k, "gap index (1 or 2)")->required();
  bnd->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));
  bnd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (prove->parsed()) return cmd_prove(k, out_path);
    if (tab->parsed()) {
      if (!have_tmin) t_min = k;
      if (!have_tmax) t_max = k + 1.0;
      return cmd_tabulate(k, t_min, t_max, step, density, exploratory, format, out_path);
    }
    if (shp->parsed()) return cmd_shape(k_list, step, density, exploratory, format, out_path);
    if (bnd->parsed()) return cmd_bounds(k, format, out_path);
  } catch (const majorant::UnsupportedCase& e) {
    std::fprintf(stderr, "unsupported: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "unsupported: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
