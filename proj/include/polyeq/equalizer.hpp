#pragma once

// Points equidistant from corresponding vertices of two regular n-gons.
//
// For non-congruent polygons such a point lies on Circle(O2, R1) and Circle(O1, R2). Pinning one
// distance pair (by rotating the second polygon, or automatically through a shared vertex) makes
// the two distance lists equal as multisets, with vertex correspondence k -> k (M1) or
// k -> n + 2 - k (M2).

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyeq/cyclic_averages.hpp"
#include "polyeq/error.hpp"
#include "polyeq/geometry.hpp"
#include "polyeq/polygon.hpp"

namespace polyeq {

enum class CaseKind { CongruentSameCentroid, CongruentDistinctCentroids, NonCongruent };

inline constexpr std::string_view to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::CongruentSameCentroid: return "CongruentSameCentroid";
    case CaseKind::CongruentDistinctCentroids: return "CongruentDistinctCentroids";
    case CaseKind::NonCongruent: return "NonCongruent";
  }
  return "Unknown";
}

enum class Locus { None, EntirePlane, PerpendicularBisector };

inline constexpr std::string_view to_string(Locus locus) {
  switch (locus) {
    case Locus::None: return "none";
    case Locus::EntirePlane: return "entire plane";
    case Locus::PerpendicularBisector: return "perpendicular bisector of O1O2";
  }
  return "unknown";
}

enum class MatchKind { Identity, Reversal };

inline constexpr std::string_view to_string(MatchKind kind) {
  return kind == MatchKind::Identity ? "Identity" : "Reversal";
}

/// 1-based index of the second-polygon vertex paired with vertex k.
inline int matched_index(MatchKind kind, int k, int n) {
  if (kind == MatchKind::Identity) return k;
  return (n + 1 - k) % n + 1;  // n + 2 - k, wrapped into 1..n
}

struct EqualDistanceSolution {
  CaseKind kind = CaseKind::NonCongruent;
  std::optional<Point> m1;
  std::optional<Point> m2;
  bool coincident = false;  // tangent case: m1 == m2
  Locus locus = Locus::None;

  int point_count() const {
    if (!m1) return 0;
    return coincident ? 1 : 2;
  }
};

inline void require_same_n(const RegularPolygon& p1, const RegularPolygon& p2) {
  if (p1.n() != p2.n()) {
    throw Error(ErrorCode::MixedN, "polygons have " + std::to_string(p1.n()) + " and " + std::to_string(p2.n()) +
                                       " vertices");
  }
}

inline CaseKind classify_pair(const RegularPolygon& p1, const RegularPolygon& p2, const Tolerance& tol = {}) {
  require_same_n(p1, p2);
  if (!tol.equal(p1.circumradius(), p2.circumradius())) return CaseKind::NonCongruent;
  const double scale = std::max(p1.circumradius(), p2.circumradius());
  if (tol.negligible(distance(p1.centroid(), p2.centroid()), scale)) return CaseKind::CongruentSameCentroid;
  return CaseKind::CongruentDistinctCentroids;
}

/// Per-vertex |M A_k - M B_{match(k)}| for k = 1..n (index 0 holds k = 1).
inline std::vector<double> matching_residuals(const RegularPolygon& p1, const RegularPolygon& p2, Point m,
                                              MatchKind kind) {
  require_same_n(p1, p2);
  const int n = p1.n();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    out.push_back(std::abs(distance(m, p1.vertex(k)) - distance(m, p2.vertex(matched_index(kind, k, n)))));
  }
  return out;
}

inline double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

inline double pair_scale(const RegularPolygon& p1, const RegularPolygon& p2) {
  return std::max(p1.circumradius(), p2.circumradius());
}

inline EqualDistanceSolution equal_distance_points(const RegularPolygon& p1, const RegularPolygon& p2,
                                                   const Tolerance& tol = {}) {
  EqualDistanceSolution sol;
  sol.kind = classify_pair(p1, p2, tol);
  if (sol.kind == CaseKind::CongruentSameCentroid) {
    sol.locus = Locus::EntirePlane;
    return sol;
  }
  if (sol.kind == CaseKind::CongruentDistinctCentroids) {
    sol.locus = Locus::PerpendicularBisector;
    return sol;
  }

  const Circle around_o2(p2.centroid(), p1.circumradius());
  const Circle around_o1(p1.centroid(), p2.circumradius());
  const IntersectionResult hit = circle_intersection(around_o2, around_o1, tol);

  if (const auto* t = std::get_if<intersection::Tangent>(&hit)) {
    sol.m1 = t->point;
    sol.m2 = t->point;
    sol.coincident = true;
    return sol;
  }
  const auto* two = std::get_if<intersection::TwoPoints>(&hit);
  if (two == nullptr) return sol;  // circles miss each other: no equal-distance point

  // The intersection ran along O2 -> O1, so its right point is left of O1 -> O2.
  const Point left_of_o1o2 = two->right;
  const Point right_of_o1o2 = two->left;
  const double scale = pair_scale(p1, p2);
  const double res_left = max_of(matching_residuals(p1, p2, left_of_o1o2, MatchKind::Identity));
  const double res_right = max_of(matching_residuals(p1, p2, right_of_o1o2, MatchKind::Identity));
  const bool both_pass = tol.negligible(res_left, scale) && tol.negligible(res_right, scale);
  if (both_pass || res_left <= res_right) {
    sol.m1 = left_of_o1o2;
    sol.m2 = right_of_o1o2;
  } else {
    sol.m1 = right_of_o1o2;
    sol.m2 = left_of_o1o2;
  }
  return sol;
}

/// Rotations of p2 about its centroid that put vertex B_1 at distance d1 from m_point.
inline std::vector<RegularPolygon> align_rotation(const RegularPolygon& p2, Point m_point, double d1,
                                                  const Tolerance& tol = {}) {
  const Circle auxiliary(m_point, d1);
  const IntersectionResult hit = circle_intersection(auxiliary, p2.circumcircle(), tol);
  auto rotated_to = [&](Point b1) {
    return RegularPolygon(p2.n(), p2.centroid(), p2.circumradius(), direction(b1 - p2.centroid()),
                          p2.orientation());
  };
  if (const auto* two = std::get_if<intersection::TwoPoints>(&hit)) {
    return {rotated_to(two->left), rotated_to(two->right)};
  }
  if (const auto* t = std::get_if<intersection::Tangent>(&hit)) {
    return {rotated_to(t->point)};
  }
  if (std::holds_alternative<intersection::Coincident>(hit)) {
    return {p2};  // every rotation keeps |M B_1| = d1
  }
  throw Error(ErrorCode::NoIntersection, "auxiliary circle misses the circumcircle of the second polygon");
}

struct Matching {
  MatchKind kind = MatchKind::Identity;
  std::vector<double> residuals;  // k = 1..n
  double max_residual = 0.0;
  // Signed model angle: M A_k^2 = R1^2 + R2^2 - 2 R1 R2 cos(2 pi (k - 1) / n + angle). |angle| is the
  // angle M O1 A1 (alpha at M1, beta at M2).
  double angle = 0.0;
  double cosine_model_residual = 0.0;  // squared-length units
  bool cosine_model_pass = false;
};

inline Matching correspondence(const RegularPolygon& p1, const RegularPolygon& p2, Point m,
                               const Tolerance& tol = {}) {
  require_same_n(p1, p2);
  const int n = p1.n();
  const double scale = std::max({p1.circumradius(), p2.circumradius(), distance(m, p1.centroid()),
                                 distance(m, p2.centroid())});
  const double pinned = std::abs(distance(m, p1.vertex(1)) - distance(m, p2.vertex(1)));
  if (!tol.negligible(pinned, scale)) {
    throw Error(ErrorCode::NoMatching, "|M A1| != |M B1|; rotate the second polygon first");
  }

  std::optional<Matching> found;
  for (MatchKind kind : {MatchKind::Identity, MatchKind::Reversal}) {
    auto res = matching_residuals(p1, p2, m, kind);
    const double worst = max_of(res);
    if (tol.negligible(worst, scale)) {
      found = Matching{kind, std::move(res), worst};
      break;
    }
  }
  if (!found) {
    throw Error(ErrorCode::NoMatching, "neither identity nor reversal correspondence holds");
  }

  Matching& match = *found;
  const Point arm_m = m - p1.centroid();
  const Point arm_a = p1.vertex(1) - p1.centroid();
  if (norm(arm_m) > tol.abs) {
    match.angle = sign(p1.orientation()) * signed_angle(arm_m, arm_a);
  }
  const double r1 = p1.circumradius();
  const double r2 = p2.circumradius();
  for (int k = 1; k <= n; ++k) {
    const double model = r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(kTwoPi * (k - 1) / n + match.angle);
    const double da = distance_squared(m, p1.vertex(k));
    const double db = distance_squared(m, p2.vertex(matched_index(match.kind, k, n)));
    match.cosine_model_residual =
        std::max({match.cosine_model_residual, std::abs(da - model), std::abs(db - model)});
  }
  match.cosine_model_pass = tol.negligible(match.cosine_model_residual, scale * scale);
  return match;
}

/// Distance lists from m to both polygons and the power-sum system between them.
inline SystemReport system_star_at(const RegularPolygon& p1, const RegularPolygon& p2, Point m,
                                   const Tolerance& tol = {}) {
  require_same_n(p1, p2);
  return verify_system_star(distances_squared(vertices(p1), m), distances_squared(vertices(p2), m), tol);
}

struct PropertyCheck {
  std::string name;
  double residual = 0.0;
  double bound = 0.0;
  bool pass = false;
  bool vacuous = false;
  std::string note;
};

struct PropertyReport {
  Point d1;
  Point d2;
  bool coincident = false;
  std::vector<PropertyCheck> checks;
  bool pass = true;

  const PropertyCheck* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// Geometric properties of M1, M2 for two polygons sharing vertex 1: M1 bisects D1D2 (D_i the
/// antipode of the shared vertex), M2 sits on the perpendicular bisector of D1D2 with A1M2 parallel
/// to it, |M1M2| equals the distance from A1 to line D1D2, O2-M1-O1 closes a parallelogram with A1,
/// and M1M2 is perpendicular to D1D2.
inline PropertyReport verify_point_properties(const RegularPolygon& p1, const RegularPolygon& p2,
                                              const EqualDistanceSolution& sol, const Tolerance& tol = {}) {
  require_same_n(p1, p2);
  const double scale = pair_scale(p1, p2);
  const Point a1 = p1.vertex(1);
  if (!tol.points_equal(a1, p2.vertex(1), scale)) {
    throw Error(ErrorCode::NotSharedVertex, "vertex 1 of the polygons differ");
  }
  if (!sol.m1 || !sol.m2) {
    throw Error(ErrorCode::NotTwoPointSolution, "solution has no equal-distance points");
  }
  const Point m1 = *sol.m1;
  const Point m2 = *sol.m2;
  const Point o1 = p1.centroid();
  const Point o2 = p2.centroid();
  const double r1 = p1.circumradius();
  const double r2 = p2.circumradius();
  const int n = p1.n();

  PropertyReport report;
  report.coincident = sol.coincident;
  report.d1 = diametric_opposite(p1, a1, tol);
  report.d2 = diametric_opposite(p2, a1, tol);
  const Point d1 = report.d1;
  const Point d2 = report.d2;

  auto add = [&](std::string name, double residual, double bound, bool vacuous = false, std::string note = {}) {
    PropertyCheck c{std::move(name), residual, bound, vacuous || residual <= bound, vacuous, std::move(note)};
    report.pass = report.pass && c.pass;
    report.checks.push_back(std::move(c));
  };
  const double len_bound = tol.bound(scale);
  const double area_bound = tol.bound(scale * scale);
  const char* degenerate = "M1 = M2 (collinear shared vertex and centroids)";

  add("antipode_midpoint", distance(m1, midpoint(d1, d2)), len_bound);

  if (n % 2 == 0) {
    const int opposite_k = 1 + n / 2;
    add("opposite_vertex_midpoint", distance(m1, midpoint(p1.vertex(opposite_k), p2.vertex(opposite_k))), len_bound);
  } else {
    add("opposite_vertex_midpoint", 0.0, len_bound, true, "n odd: no vertex opposite the shared vertex");
  }

  const Point base = d2 - d1;
  const double base_len = norm(base);
  {
    const double bisector = std::abs(distance(m2, d1) - distance(m2, d2));
    const double parallel = base_len > tol.abs ? std::abs(cross(m2 - a1, base)) / base_len : 0.0;
    add("m2_bisector_and_parallel", std::max(bisector, parallel), len_bound, sol.coincident,
        sol.coincident ? degenerate : "");
  }
  {
    const double residual = base_len > tol.abs ? std::abs(distance(m1, m2) - point_line_distance(a1, d1, d2, tol))
                                               : distance(m1, m2);
    add("m1m2_length", residual, len_bound, sol.coincident, sol.coincident ? degenerate : "");
  }
  {
    // O2 M1 O1 M2 has sides R1, R2, R2, R1; the parallelogram with sides R1, R2 is A1 O1 M1 O2.
    const double closure = distance(m1 + a1, o1 + o2);
    const double sides = std::max({std::abs(distance(o2, m1) - r1), std::abs(distance(m1, o1) - r2),
                                   std::abs(distance(o1, m2) - r2), std::abs(distance(m2, o2) - r1)});
    add("parallelogram_closure", std::max(closure, sides), len_bound);
  }
  add("m1m2_perpendicular", std::abs(dot(m1 - m2, d1 - d2)), area_bound, sol.coincident,
      sol.coincident ? degenerate : "");
  return report;
}

}  // namespace polyeq
