#pragma once

// Runs a scenario through the library and collects every check with its residual and bound.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "polyeq/bottema.hpp"
#include "polyeq/cli/scenario.hpp"
#include "polyeq/cyclic_averages.hpp"
#include "polyeq/equalizer.hpp"
#include "polyeq/polygon.hpp"

namespace polyeq::cli {

struct CheckRow {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct LabeledPoint {
  std::string label;
  Point point;
};

struct Report {
  Scenario scenario;
  std::string classification;
  std::vector<LabeledPoint> points;
  std::vector<std::string> matchings;
  std::vector<CheckRow> checks;
  std::vector<std::string> findings;
  bool pass = true;

  void add(std::string name, double residual, double tolerance, bool ok, std::string note = {}) {
    pass = pass && ok;
    checks.push_back({std::move(name), residual, tolerance, ok, std::move(note)});
  }
  // A residual check where pass means residual <= tolerance.
  void add_bound(std::string name, double residual, double tolerance, std::string note = {}) {
    add(std::move(name), residual, tolerance, residual <= tolerance, std::move(note));
  }
  void fail(std::string name, const std::string& why) { add(std::move(name), NAN, 0.0, false, why); }

  const LabeledPoint* point(std::string_view label) const {
    for (const auto& p : points) {
      if (p.label == label) return &p;
    }
    return nullptr;
  }
  const CheckRow* check(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// The polygons a scenario describes (one for identity_check, two otherwise).
inline std::vector<RegularPolygon> scenario_polygons(const Scenario& s) {
  const Tolerance tol = s.effective_tolerance();
  if (const auto* p = std::get_if<PairParams>(&s.params)) {
    return {make_polygon(s.n, p->centroid1, p->r1, p->phase1, orientation_from_int(p->orient1)),
            make_polygon(s.n, p->centroid2, p->r2, p->phase2, orientation_from_int(p->orient2))};
  }
  if (const auto* p = std::get_if<SharedVertexParams>(&s.params)) {
    return {from_shared_vertex(p->vertex, p->centroid1, s.n, orientation_from_int(p->orient1), tol),
            from_shared_vertex(p->vertex, p->centroid2, s.n, orientation_from_int(p->orient2), tol)};
  }
  if (const auto* p = std::get_if<BottemaParams>(&s.params)) {
    const auto r = bottema_construct(p->an, p->a1, p->bn, s.n, side_from_int(p->side1), side_from_int(p->side2), tol);
    return {r.poly1, r.poly2};
  }
  const auto& p = std::get<IdentityCheckParams>(s.params);
  return {make_polygon(s.n, p.centroid, p.r, p.phase, orientation_from_int(p.orient))};
}

namespace detail {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string fmt(Point p) { return "(" + fmt(p.x) + ", " + fmt(p.y) + ")"; }

// Runs `body`; a library error becomes a failing check instead of escaping.
inline void guarded(Report& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    report.fail(name, e.what());
  }
}

inline void add_system_star(Report& report, const std::string& label, const RegularPolygon& p1,
                            const RegularPolygon& p2, Point m, const Tolerance& tol) {
  const SystemReport sys = system_star_at(p1, p2, m, tol);
  report.add("system_star[" + label + "]", sys.max_rel_residual, tol.rel, sys.pass);
}

inline void run_pair_like_points(Report& report, const RegularPolygon& p1, const RegularPolygon& p2,
                                 const EqualDistanceSolution& sol, const Tolerance& tol, bool shared) {
  const double scale = pair_scale(p1, p2);
  std::vector<std::pair<std::string, Point>> labeled;
  if (sol.coincident) {
    labeled.emplace_back("M1", *sol.m1);
    report.points.push_back({"M1", *sol.m1});
    report.points.push_back({"M2", *sol.m2});
    report.findings.push_back("single equal-distance point (tangent circles): M1 = M2 = " + fmt(*sol.m1));
  } else {
    labeled.emplace_back("M1", *sol.m1);
    labeled.emplace_back("M2", *sol.m2);
    report.points.push_back({"M1", *sol.m1});
    report.points.push_back({"M2", *sol.m2});
  }

  for (const auto& [label, m] : labeled) {
    add_system_star(report, label, p1, p2, m, tol);
    if (shared) {
      guarded(report, "vertex_matching[" + label + "]", [&, &label = label, m = m] {
        const Matching match = correspondence(p1, p2, m, tol);
        report.matchings.push_back(label + ": " + std::string(to_string(match.kind)) +
                                   " (angle " + fmt(std::abs(match.angle)) + " rad)");
        const bool expected_kind = sol.coincident || (label == "M1") == (match.kind == MatchKind::Identity);
        report.add("vertex_matching[" + label + "]", match.max_residual, tol.bound(scale), expected_kind,
                   std::string(to_string(match.kind)) + " matching");
        report.add("cosine_model[" + label + "]", match.cosine_model_residual, tol.bound(scale * scale),
                   match.cosine_model_pass);
        const auto cmp = multisets_equal(distances_squared(vertices(p1), m), distances_squared(vertices(p2), m), tol);
        report.add("multiset_equal[" + label + "]", cmp.max_residual, tol.bound(scale * scale), cmp.equal);
      });
      continue;
    }
    // No shared vertex: rotate the second polygon so that |M B1| = |M A1|.
    guarded(report, "aligned_multiset[" + label + "]", [&, &label = label, m = m] {
      const double d1 = distance(m, p1.vertex(1));
      const auto candidates = align_rotation(p2, m, d1, tol);
      bool any = false;
      double best = INFINITY;
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        const auto& q = candidates[j];
        const auto cmp = multisets_equal(distances_squared(vertices(p1), m), distances_squared(vertices(q), m), tol);
        best = std::min(best, cmp.max_residual);
        any = any || cmp.equal;
        std::string desc = label + " candidate " + std::to_string(j + 1) + " (phase " + fmt(q.phase()) + "): ";
        try {
          const Matching match = correspondence(p1, q, m, tol);
          desc += std::string(to_string(match.kind));
        } catch (const Error&) {
          desc += "no index correspondence";
        }
        report.matchings.push_back(desc);
      }
      report.add("aligned_multiset[" + label + "]", best, tol.bound(scale * scale), any,
                 std::to_string(candidates.size()) + " rotation candidate(s)");
    });
  }

  if (shared) {
    guarded(report, "properties", [&] {
      const PropertyReport props = verify_point_properties(p1, p2, sol, tol);
      report.points.push_back({"D1", props.d1});
      report.points.push_back({"D2", props.d2});
      for (const auto& c : props.checks) {
        report.add(c.name, c.residual, c.bound, c.pass, c.vacuous ? "vacuous: " + c.note : c.note);
      }
    });
  }
}

inline void run_congruent(Report& report, const RegularPolygon& p1, const RegularPolygon& p2, CaseKind kind,
                          const Tolerance& tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double reach = 2.0 * (pair_scale(p1, p2) + distance(p1.centroid(), p2.centroid()));
  double worst = 0.0;
  bool ok = true;
  constexpr int kProbes = 8;
  for (int i = 0; i < kProbes; ++i) {
    Point m;
    if (kind == CaseKind::CongruentSameCentroid) {
      m = p1.centroid() + Point{reach * unit(rng), reach * unit(rng)};
    } else {
      const Point mid = midpoint(p1.centroid(), p2.centroid());
      const Point axis = perp(p2.centroid() - p1.centroid());
      m = mid + (reach * unit(rng) / norm(axis)) * axis;
    }
    const SystemReport sys = system_star_at(p1, p2, m, tol);
    worst = std::max(worst, sys.max_rel_residual);
    ok = ok && sys.pass;
  }
  const char* name = kind == CaseKind::CongruentSameCentroid ? "rotational_invariant" : "reflection_invariant";
  report.add(name, worst, tol.rel, ok, std::to_string(kProbes) + " seeded probes on the locus");
}

inline void run_two_polygons(Report& report, const RegularPolygon& p1, const RegularPolygon& p2,
                             const Tolerance& tol, std::uint64_t seed, bool shared) {
  const EqualDistanceSolution sol = equal_distance_points(p1, p2, tol);
  report.classification = std::string(to_string(sol.kind));
  if (sol.locus != Locus::None) {
    report.findings.push_back("equal-distance locus: " + std::string(to_string(sol.locus)));
    run_congruent(report, p1, p2, sol.kind, tol, seed);
    return;
  }
  if (sol.point_count() == 0) {
    report.findings.push_back("no equal-distance point: Circle(O2, R1) and Circle(O1, R2) do not meet");
    return;
  }
  run_pair_like_points(report, p1, p2, sol, tol, shared);
}

inline void run_bottema(Report& report, const Scenario& s, const BottemaParams& p, const Tolerance& tol) {
  const Side side1 = side_from_int(p.side1);
  const BottemaResult r = bottema_construct(p.an, p.a1, p.bn, s.n, side1, side_from_int(p.side2), tol);
  report.classification = "Bottema";
  report.points = {{"M1", r.m1}, {"M2", r.m2}, {"D1", r.d1}, {"D2", r.d2}, {"H", r.h}};
  if (r.collinear) report.findings.push_back("apex is collinear with the base (degenerate triangle)");

  const double base = distance(p.an, p.bn);
  const double bound = tol.bound(base);
  const Point closed = closed_form_midpoint(p.an, p.bn, s.n, midpoint_side(side1), tol);
  report.add_bound("closed_form_midpoint", distance(r.m1, closed), bound);
  const double altitude = 0.5 * base / std::tan(kPi / s.n);
  report.add_bound("altitude_HM1", std::abs(point_line_distance(r.m1, p.an, p.bn, tol) - altitude), bound);
  report.add_bound("foot_is_base_midpoint", distance(r.h, midpoint(p.an, p.bn)), bound);
  double iso = 0.0;
  for (int k = 1; k <= s.n; ++k) {
    iso = std::max(iso, std::abs(distance(r.m1, r.poly1.vertex(k)) - distance(r.m1, r.poly2.vertex(k))));
  }
  report.add_bound("isosceles_M1", iso, tol.bound(std::max(r.poly1.circumradius(), r.poly2.circumradius())));
  guarded(report, "vertex_angle_table", [&] {
    const AngleTable table = vertex_angles(r, tol);
    report.add("vertex_angle_table", table.max_residual, tol.bound(1.0), table.pass, "radians, k = 2..n");
  });
  if (p.sweep_samples >= 2) {
    const IndependenceReport ind = verify_independence(p.an, p.bn, s.n, p.sweep_samples, tol, s.seed);
    report.add("independence_sweep", std::max(ind.max_deviation, ind.max_closed_form_error), ind.bound, ind.pass,
               std::to_string(ind.samples) + " apex samples");
  }
}

inline void run_identity(Report& report, const Scenario& s, const IdentityCheckParams& p, const Tolerance& tol) {
  const RegularPolygon poly = make_polygon(s.n, p.centroid, p.r, p.phase, orientation_from_int(p.orient));
  report.classification = "IdentityCheck";
  for (std::size_t i = 0; i < p.probes.size(); ++i) {
    const std::string label = "P" + std::to_string(i + 1);
    report.points.push_back({label, p.probes[i]});
    const IdentityReport id = verify_identity(poly, p.probes[i], tol, p.max_m);
    report.add("identity[" + label + "]", id.max_rel_residual, tol.rel, id.pass,
               "m = 1.." + std::to_string(id.rows.size()));
  }
}

}  // namespace detail

inline Report run_scenario(const Scenario& s) {
  Report report;
  report.scenario = s;
  const Tolerance tol = s.effective_tolerance();
  try {
    if (const auto* p = std::get_if<BottemaParams>(&s.params)) {
      detail::run_bottema(report, s, *p, tol);
    } else if (const auto* p = std::get_if<IdentityCheckParams>(&s.params)) {
      detail::run_identity(report, s, *p, tol);
    } else {
      const auto polys = scenario_polygons(s);
      detail::run_two_polygons(report, polys[0], polys[1], tol, s.seed, s.kind == ScenarioKind::SharedVertex);
    }
  } catch (const Error& e) {
    report.fail("scenario", e.what());
  }
  return report;
}

inline nlohmann::json report_to_json(const Report& r) {
  using nlohmann::json;
  json doc;
  doc["scenario"] = scenario_to_json(r.scenario);
  doc["classification"] = r.classification;
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back({{"label", p.label}, {"x", p.point.x}, {"y", p.point.y}});
  doc["points"] = pts;
  doc["matchings"] = r.matchings;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json row = {{"name", c.name}, {"tolerance", c.tolerance}, {"pass", c.pass}, {"note", c.note}};
    row["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
    checks.push_back(row);
  }
  doc["checks"] = checks;
  doc["findings"] = r.findings;
  doc["pass"] = r.pass;
  return doc;
}

inline std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "scenario: " << to_string(r.scenario.kind) << " (n = " << r.scenario.n << ")\n";
  out << "classification: " << (r.classification.empty() ? "-" : r.classification) << "\n";
  for (const auto& p : r.points) out << "point " << p.label << " = " << detail::fmt(p.point) << "\n";
  for (const auto& m : r.matchings) out << "matching " << m << "\n";
  for (const auto& f : r.findings) out << "finding: " << f << "\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual=" << detail::fmt(c.residual)
        << "  tolerance=" << detail::fmt(c.tolerance);
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << "\n";
  }
  out << "overall: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace polyeq::cli
