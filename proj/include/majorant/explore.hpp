#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace majorant {

struct TabulatePoint {
  double t = 0.0;
  double estimate = 0.0;     // midpoint-sum estimate of d(t)
  double error_bound = 0.0;  // two-integral quadrature error bound
  bool unreliable = false;   // error bound exceeds |estimate|: the sign is not evidence
};

struct Tabulation {
  int k = 0;
  double step = 0.0;     // node spacing on [0, 1/2]; N = 1/(2 step)
  double density = 0.0;  // t-grid spacing
  long nodes = 0;
  bool certified = false;  // error bounds from certified constants (k <= 2) or grid fallback
  std::vector<TabulatePoint> points;
};

// d(t) over [t_min, t_max]. k in {1, 2} uses certified error bounds; other
// k need `exploratory` (non-certified grid-max fallback) and are rejected
// otherwise.
Tabulation tabulate(int k, double t_min, double t_max, double step, double density,
                    bool exploratory);

// Normalized curve f_k(s) = d(k+s) / max d over the tabulation grid.
struct ShapeCurve {
  int k = 0;
  double argmax_s = 0.0;
  std::vector<double> s;
  std::vector<double> values;
};
ShapeCurve shape_curve(int k, double step, double density, bool exploratory);

std::string tabulation_csv(const Tabulation& tab);
std::string shape_csv(const std::vector<ShapeCurve>& curves);
std::string tabulation_svg(const Tabulation& tab);
std::string shape_svg(const std::vector<ShapeCurve>& curves);
nlohmann::json tabulation_json(const Tabulation& tab);
nlohmann::json shape_json(const std::vector<ShapeCurve>& curves);

}  // namespace majorant
