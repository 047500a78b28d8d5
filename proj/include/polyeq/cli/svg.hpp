#pragma once

// Standalone SVG 1.1 figures of a scenario. World coordinates are y-up; the viewBox is fitted to
// the drawn geometry with 10% padding. Output is byte-stable: fixed element order, 6 decimals.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "polyeq/cli/report.hpp"
#include "polyeq/equalizer.hpp"
#include "polyeq/polygon.hpp"

namespace polyeq::cli {

namespace svg {

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

class Canvas {
 public:
  void include(Point p, double r = 0.0) {
    min_x_ = std::min(min_x_, p.x - r);
    max_x_ = std::max(max_x_, p.x + r);
    min_y_ = std::min(min_y_, p.y - r);
    max_y_ = std::max(max_y_, p.y + r);
  }

  void polygon(const std::vector<Point>& pts, const std::string& cls, const std::string& style) {
    std::string attr;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      include(pts[i]);
      attr += (i ? " " : "") + num(pts[i].x) + "," + num(-pts[i].y);
    }
    body_ += "  <polygon class=\"" + cls + "\" points=\"" + attr + "\" " + style + "/>\n";
  }

  void circle(Point c, double r, const std::string& cls, const std::string& style) {
    include(c, r);
    body_ += "  <circle class=\"" + cls + "\" cx=\"" + num(c.x) + "\" cy=\"" + num(-c.y) + "\" r=\"" + num(r) +
             "\" " + style + "/>\n";
  }

  void line(Point a, Point b, const std::string& cls, const std::string& style) {
    include(a);
    include(b);
    body_ += "  <line class=\"" + cls + "\" x1=\"" + num(a.x) + "\" y1=\"" + num(-a.y) + "\" x2=\"" + num(b.x) +
             "\" y2=\"" + num(-b.y) + "\" " + style + "/>\n";
  }

  // Cross marker with a text label; marker size is set when the document is finished.
  void marker(Point p, const std::string& label, const std::string& cls, const std::string& color) {
    include(p);
    markers_.push_back({p, label, cls, color});
  }

  std::string finish() const {
    const bool empty = min_x_ > max_x_;
    const double lo_x = empty ? -1.0 : min_x_;
    const double hi_y = empty ? 1.0 : max_y_;
    double w = empty ? 2.0 : max_x_ - min_x_;
    double h = empty ? 2.0 : max_y_ - min_y_;
    const double span = std::max({w, h, 1e-9});
    const double pad = 0.1 * span;
    const double x0 = lo_x - pad;
    const double y0 = -hi_y - pad;
    w += 2.0 * pad;
    h += 2.0 * pad;
    const double size = 0.012 * span;
    const double stroke = 0.003 * span;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(x0) + " " + num(y0) + " " +
           num(w) + " " + num(h) + "\" width=\"800\" height=\"" + num(800.0 * h / w) + "\">\n";
    out += "  <g fill=\"none\" stroke-width=\"" + num(stroke) + "\" font-family=\"sans-serif\" font-size=\"" +
           num(4.0 * size) + "\">\n";
    out += body_;
    for (const auto& m : markers_) {
      const double x = m.p.x;
      const double y = -m.p.y;
      out += "  <path class=\"" + m.cls + "\" d=\"M" + num(x - size) + "," + num(y - size) + " L" + num(x + size) +
             "," + num(y + size) + " M" + num(x - size) + "," + num(y + size) + " L" + num(x + size) + "," +
             num(y - size) + "\" stroke=\"" + m.color + "\"/>\n";
      out += "  <text class=\"label\" x=\"" + num(x + 1.5 * size) + "\" y=\"" + num(y - 1.5 * size) + "\" fill=\"" +
             m.color + "\" stroke=\"none\">" + m.label + "</text>\n";
    }
    out += "  </g>\n</svg>\n";
    return out;
  }

 private:
  struct Marker {
    Point p;
    std::string label;
    std::string cls;
    std::string color;
  };
  double min_x_ = INFINITY;
  double max_x_ = -INFINITY;
  double min_y_ = INFINITY;
  double max_y_ = -INFINITY;
  std::string body_;
  std::vector<Marker> markers_;
};

inline const char* palette(int i) {
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                 "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[i % 10];
}

}  // namespace svg

inline std::string render_svg(const Scenario& s, const Report& r) {
  svg::Canvas canvas;
  std::vector<RegularPolygon> polys;
  try {
    polys = scenario_polygons(s);
  } catch (const Error&) {
    // Invalid geometry: render the report points only.
  }
  const char* poly_colors[] = {"#1f4e99", "#a12a2a"};

  if (const auto* p = std::get_if<BottemaParams>(&s.params)) {
    canvas.polygon({p->an, p->a1, p->bn}, "triangle", "stroke=\"#333333\" fill=\"#eeeeee\"");
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    canvas.polygon(vertices(polys[i]), "ngon", std::string("stroke=\"") + poly_colors[i % 2] + "\"");
  }
  if (s.kind == ScenarioKind::Pair || s.kind == ScenarioKind::SharedVertex || s.kind == ScenarioKind::IdentityCheck) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
      canvas.circle(polys[i].centroid(), polys[i].circumradius(), "circumcircle",
                    std::string("stroke=\"") + poly_colors[i % 2] + "\" stroke-opacity=\"0.5\"");
    }
  }
  if (polys.size() == 2 && s.kind != ScenarioKind::Bottema && r.classification == "NonCongruent") {
    canvas.circle(polys[1].centroid(), polys[0].circumradius(), "locus-circle",
                  "stroke=\"#555555\" stroke-dasharray=\"0.05,0.05\" pathLength=\"1\"");
    canvas.circle(polys[0].centroid(), polys[1].circumradius(), "locus-circle",
                  "stroke=\"#555555\" stroke-dasharray=\"0.05,0.05\" pathLength=\"1\"");
  }

  const LabeledPoint* m1 = r.point("M1");
  const LabeledPoint* m2 = r.point("M2");
  const LabeledPoint* d1 = r.point("D1");
  const LabeledPoint* d2 = r.point("D2");
  const bool coincident = m1 && m2 && m1->point == m2->point;

  if (polys.size() == 2 && s.kind != ScenarioKind::Bottema) {
    const int n = polys[0].n();
    auto pair_segments = [&](Point m, MatchKind kind, const char* dash) {
      for (int k = 2; k <= n; ++k) {
        const std::string style = std::string("stroke=\"") + svg::palette(k - 2) + "\" stroke-opacity=\"0.6\"" + dash;
        canvas.line(m, polys[0].vertex(k), "pair-segment", style);
        canvas.line(m, polys[1].vertex(matched_index(kind, k, n)), "pair-segment", style);
      }
    };
    if (s.kind == ScenarioKind::SharedVertex && m1) {
      pair_segments(m1->point, MatchKind::Identity, "");
      if (m2 && !coincident) pair_segments(m2->point, MatchKind::Reversal, " stroke-dasharray=\"0.02,0.02\" pathLength=\"1\"");
    }
  }
  if (d1 && d2) canvas.line(d1->point, d2->point, "d-segment", "stroke=\"#2a7a2a\"");

  if (s.kind == ScenarioKind::IdentityCheck) {
    for (const auto& p : r.points) canvas.marker(p.point, p.label, "probe", "#444444");
  } else {
    if (m1) canvas.marker(m1->point, coincident ? "M1=M2" : "M1", "eqpoint", "#000000");
    if (m2 && !coincident) canvas.marker(m2->point, "M2", "eqpoint", "#000000");
    for (const char* aux : {"D1", "D2", "H"}) {
      if (const auto* q = r.point(aux)) canvas.marker(q->point, aux, "aux-point", "#2a7a2a");
    }
  }
  return canvas.finish();
}

}  // namespace polyeq::cli
