#include "majorant/explore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "majorant/kernels.hpp"
#include "majorant/quadrature.hpp"

namespace majorant {

using nlohmann::json;

namespace {

double pow_range_upper(double floor, double sup, double e) {
  // max of g^e over g in [floor, sup]
  return std::max(std::pow(floor, e), std::pow(sup, e));
}

// Certified sup bound for |H''_{t,0}| from the case's certified constants.
double certified_hxx_bound_j0(int k, double t) {
  const KernelBounds& cb = case_bounds(k);
  double term1;
  if (k == 1) {
    // |G''| <= C2 G, so |G'' G^(t-1)| <= C2 G^t
    const double c2 = std::max(cb.c2_plus, cb.c2_minus);
    term1 = t * c2 * pow_range_upper(cb.g_floor, cb.sup_g, t);
  } else {
    const double ggabs = std::max(std::fabs(cb.gddg_min), std::fabs(cb.gddg_max));
    term1 = t * ggabs * pow_range_upper(cb.g_floor, cb.sup_g, t - 2.0);
  }
  // G'^2 G^(t-2) = (G'^2/G) G^(t-1) <= C1 G^(t-1)
  const double term2 =
      t * std::fabs(t - 1.0) * cb.c1 * pow_range_upper(cb.g_floor, cb.sup_g, t - 1.0);
  return term1 + term2;
}

double exploratory_hxx_gridmax(int k, Sign sign, double t) {
  const KernelSpec spec{{k, sign}, t, 0};
  const int n = 4096;
  double best = 0.0;
  for (int i = 0; i <= n; i++) best = std::max(best, std::fabs(h_xx(spec, 0.5 * i / n)));
  return 1.1 * best;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

Tabulation tabulate(int k, double t_min, double t_max, double step, double density,
                    bool exploratory) {
  if (k < 1) throw std::invalid_argument("tabulate: k must be >= 1");
  if (!(step > 0.0) || !(density > 0.0) || !(t_min <= t_max))
    throw std::invalid_argument("tabulate: bad range or spacing");
  const bool certified = (k == 1 || k == 2);
  if (!certified && !exploratory)
    throw std::invalid_argument("tabulate: k >= 3 has no certified H'' bound; pass --exploratory");

  Tabulation tab;
  tab.k = k;
  tab.step = step;
  tab.density = density;
  tab.nodes = std::max<long>(1, std::lround(1.0 / (2.0 * step)));
  tab.certified = certified;

  const long count = std::lround((t_max - t_min) / density);
  const double nn = static_cast<double>(tab.nodes);
  for (long i = 0; i <= count; i++) {
    const double t = t_min + density * static_cast<double>(i);
    TabulatePoint p;
    p.t = t;
    p.estimate = d_deriv_estimate(0, t, k, tab.nodes);
    double bound_sum;
    if (certified) {
      bound_sum = 2.0 * certified_hxx_bound_j0(k, t);
    } else {
      bound_sum = exploratory_hxx_gridmax(k, Sign::plus, t) +
                  exploratory_hxx_gridmax(k, Sign::minus, t);
    }
    p.error_bound = bound_sum / (192.0 * nn * nn);
    p.unreliable = p.error_bound > std::fabs(p.estimate);
    tab.points.push_back(p);
  }
  return tab;
}

ShapeCurve shape_curve(int k, double step, double density, bool exploratory) {
  if (k < 1) throw std::invalid_argument("shape_curve: k must be >= 1");
  Tabulation tab = tabulate(k, static_cast<double>(k), static_cast<double>(k) + 1.0, step,
                            density, exploratory);
  ShapeCurve curve;
  curve.k = k;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : tab.points) best = std::max(best, p.estimate);
  double arg = 0.0;
  for (const auto& p : tab.points) {
    const double s = p.t - k;
    curve.s.push_back(s);
    curve.values.push_back(p.estimate / best);
    if (p.estimate == best) arg = s;
  }
  // report the leftmost attaining point
  for (size_t i = 0; i < curve.values.size(); i++)
    if (curve.values[i] == 1.0) { arg = curve.s[i]; break; }
  curve.argmax_s = arg;
  return curve;
}

std::string tabulation_csv(const Tabulation& tab) {
  std::string out = "t,estimate,error_bound,unreliable\n";
  for (const auto& p : tab.points) {
    out += fmt(p.t);
    out += ',';
    out += fmt(p.estimate);
    out += ',';
    out += fmt(p.error_bound);
    out += ',';
    out += p.unreliable ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string shape_csv(const std::vector<ShapeCurve>& curves) {
  std::string out = "s";
  for (const auto& c : curves) out += ",k" + std::to_string(c.k);
  out += '\n';
  if (curves.empty()) return out;
  for (size_t i = 0; i < curves.front().s.size(); i++) {
    out += fmt(curves.front().s[i]);
    for (const auto& c : curves) {
      out += ',';
      out += fmt(c.values[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

struct SvgFrame {
  double x0, x1, y0, y1;  // data ranges
  static constexpr int width = 720, height = 440, margin = 50;
  double px(double x) const {
    return margin + (x - x0) / (x1 - x0 + (x1 == x0 ? 1.0 : 0.0)) * (width - 2 * margin);
  }
  double py(double y) const {
    return height - margin - (y - y0) / (y1 - y0 + (y1 == y0 ? 1.0 : 0.0)) * (height - 2 * margin);
  }
};

std::string svg_header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"440\" "
         "viewBox=\"0 0 720 440\">\n";
}

std::string svg_axes(const SvgFrame& f) {
  std::string out;
  out += "<rect x=\"50\" y=\"50\" width=\"620\" height=\"340\" fill=\"none\" stroke=\"#888\"/>\n";
  out += "<text x=\"50\" y=\"46\" font-size=\"12\">" + fmt(f.y1) + "</text>\n";
  out += "<text x=\"50\" y=\"404\" font-size=\"12\">" + fmt(f.y0) + "</text>\n";
  out += "<text x=\"46\" y=\"420\" font-size=\"12\">" + fmt(f.x0) + "</text>\n";
  out += "<text x=\"640\" y=\"420\" font-size=\"12\">" + fmt(f.x1) + "</text>\n";
  if (f.y0 < 0.0 && f.y1 > 0.0) {
    const double zy = f.py(0.0);
    out += "<line x1=\"50\" x2=\"670\" y1=\"" + fmt(zy) + "\" y2=\"" + fmt(zy) +
           "\" stroke=\"#ccc\"/>\n";
  }
  return out;
}

std::string svg_polyline(const SvgFrame& f, const std::vector<double>& xs,
                         const std::vector<double>& ys, const char* color) {
  std::string out = "<polyline fill=\"none\" stroke=\"";
  out += color;
  out += "\" points=\"";
  for (size_t i = 0; i < xs.size(); i++) {
    if (i) out += ' ';
    out += fmt(f.px(xs[i])) + "," + fmt(f.py(ys[i]));
  }
  out += "\"/>\n";
  return out;
}

}  // namespace

std::string tabulation_svg(const Tabulation& tab) {
  std::vector<double> xs, ys;
  for (const auto& p : tab.points) {
    xs.push_back(p.t);
    ys.push_back(p.estimate);
  }
  SvgFrame f{xs.front(), xs.back(), *std::min_element(ys.begin(), ys.end()),
             *std::max_element(ys.begin(), ys.end())};
  if (f.y0 > 0.0) f.y0 = 0.0;
  std::string out = svg_header() + svg_axes(f);
  out += svg_polyline(f, xs, ys, "#1f6fb2");
  out += "<text x=\"300\" y=\"30\" font-size=\"13\">d(t), k=" + std::to_string(tab.k) + "</text>\n";
  out += "</svg>\n";
  return out;
}

std::string shape_svg(const std::vector<ShapeCurve>& curves) {
  static const char* colors[] = {"#1f6fb2", "#b23a1f", "#3ab21f", "#7a1fb2", "#b2861f"};
  SvgFrame f{0.0, 1.0, 0.0, 1.0};
  std::string out = svg_header() + svg_axes(f);
  for (size_t i = 0; i < curves.size(); i++)
    out += svg_polyline(f, curves[i].s, curves[i].values, colors[i % 5]);
  out += "<text x=\"300\" y=\"30\" font-size=\"13\">normalized d(k+s)</text>\n";
  out += "</svg>\n";
  return out;
}

json tabulation_json(const Tabulation& tab) {
  json points = json::array();
  for (const auto& p : tab.points)
    points.push_back(json{{"t", p.t},
                          {"estimate", p.estimate},
                          {"error_bound", p.error_bound},
                          {"unreliable", p.unreliable}});
  return json{{"k", tab.k},          {"step", tab.step},       {"density", tab.density},
              {"nodes", tab.nodes},  {"certified", tab.certified}, {"points", points}};
}

json shape_json(const std::vector<ShapeCurve>& curves) {
  json arr = json::array();
  for (const auto& c : curves)
    arr.push_back(json{{"k", c.k}, {"argmax_s", c.argmax_s}, {"s", c.s}, {"values", c.values}});
  return json{{"curves", arr}};
}

}  // namespace majorant
