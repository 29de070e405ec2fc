#include <doctest.h>

#include <cmath>

#include "majorant/explore.hpp"

using namespace majorant;

TEST_CASE("tabulation: node count, Parseval endpoints, reliability flag") {
  const Tabulation tab = tabulate(1, 1.0, 2.0, 0.001, 0.1, false);
  CHECK(tab.nodes == 500);
  CHECK(tab.certified);
  REQUIRE(tab.points.size() == 11);
  // d(1) and d(2) vanish exactly on the midpoint grid, so both ends are flagged
  CHECK(std::fabs(tab.points.front().estimate) < 1e-12);
  CHECK(tab.points.front().unreliable);
  CHECK(std::fabs(tab.points.back().estimate) < 1e-12);
  CHECK(tab.points.back().unreliable);
  for (const auto& p : tab.points) CHECK(p.error_bound > 0.0);
}

TEST_CASE("tabulation rejects k >= 3 without the exploratory flag") {
  CHECK_THROWS_AS(tabulate(3, 3.0, 3.5, 0.01, 0.1, false), std::invalid_argument);
  CHECK_THROWS_AS(tabulate(0, 0.0, 1.0, 0.01, 0.1, true), std::invalid_argument);
  const Tabulation tab = tabulate(3, 3.2, 3.6, 0.01, 0.2, true);
  CHECK(!tab.certified);
  CHECK(tab.points.size() == 3);
  for (const auto& p : tab.points) CHECK(p.estimate > 0.0);
}

TEST_CASE("shape curves normalize to one and report the argmax") {
  const ShapeCurve c1 = shape_curve(1, 0.001, 0.01, false);
  const ShapeCurve c2 = shape_curve(2, 0.001, 0.01, false);
  double m1 = 0.0, m2 = 0.0;
  for (double v : c1.values) m1 = std::max(m1, v);
  for (double v : c2.values) m2 = std::max(m2, v);
  CHECK(m1 == 1.0);
  CHECK(m2 == 1.0);
  CHECK(c1.argmax_s == doctest::Approx(0.68).epsilon(0.05));
  CHECK(c2.argmax_s == doctest::Approx(0.73).epsilon(0.05));
  CHECK(std::fabs(c1.argmax_s - c2.argmax_s) <= 0.15);
}

TEST_CASE("CSV output is deterministic and carries one row per point") {
  const Tabulation tab = tabulate(2, 2.0, 3.0, 0.002, 0.05, false);
  const std::string a = tabulation_csv(tab);
  const std::string b = tabulation_csv(tabulate(2, 2.0, 3.0, 0.002, 0.05, false));
  CHECK(a == b);
  CHECK(a.substr(0, a.find('\n')) == "t,estimate,error_bound,unreliable");
  long rows = -1;  // header
  for (char ch : a)
    if (ch == '\n') rows++;
  CHECK(rows == static_cast<long>(tab.points.size()));
}

TEST_CASE("SVG carries exactly the tabulated points, unsmoothed") {
  const Tabulation tab = tabulate(1, 1.0, 2.0, 0.005, 0.1, false);
  const std::string svg = tabulation_svg(tab);
  CHECK(svg.find("<svg") == 0);
  const auto at = svg.find("points=\"");
  REQUIRE(at != std::string::npos);
  const auto end = svg.find('"', at + 8);
  const std::string pts = svg.substr(at + 8, end - at - 8);
  long pairs = pts.empty() ? 0 : 1;
  for (char ch : pts)
    if (ch == ' ') pairs++;
  CHECK(pairs == static_cast<long>(tab.points.size()));
}

TEST_CASE("shape CSV layout") {
  const std::vector<ShapeCurve> curves = {shape_curve(1, 0.01, 0.25, false),
                                          shape_curve(2, 0.01, 0.25, false)};
  const std::string csv = shape_csv(curves);
  CHECK(csv.substr(0, csv.find('\n')) == "s,k1,k2");
  CHECK(shape_csv(curves) == csv);
}

TEST_CASE("JSON emission mirrors the tabulation") {
  const Tabulation tab = tabulate(1, 1.2, 1.4, 0.01, 0.1, false);
  const nlohmann::json j = tabulation_json(tab);
  CHECK(j["k"] == 1);
  CHECK(j["points"].size() == tab.points.size());
  CHECK(j["nodes"] == tab.nodes);
  const nlohmann::json s = shape_json({shape_curve(1, 0.01, 0.5, false)});
  CHECK(s["curves"].size() == 1);
}
