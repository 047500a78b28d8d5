#pragma once

// Generalized Bottema configuration: regular n-gons erected on sides A1An and A1Bn of a triangle.
// The midpoint of the antipodes of A1 is the centre of the regular n-gon on AnBn, whatever A1 is.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "polyeq/equalizer.hpp"
#include "polyeq/error.hpp"
#include "polyeq/geometry.hpp"
#include "polyeq/polygon.hpp"

namespace polyeq {

struct BottemaResult {
  RegularPolygon poly1;  // erected on A1An
  RegularPolygon poly2;  // erected on A1Bn
  Point d1;
  Point d2;
  Point m1;  // midpoint of D1D2
  Point m2;
  Point h;   // foot of the perpendicular from M1 to line AnBn
  bool collinear = false;
  bool m2_coincident = false;
};

/// Sides that put both polygons outside the triangle An A1 Bn.
inline std::pair<Side, Side> exterior_sides(Point an, Point a1, Point bn) {
  if (cross(an - a1, bn - a1) >= 0.0) return {Side::Right, Side::Left};
  return {Side::Left, Side::Right};
}

inline BottemaResult bottema_construct(Point an, Point a1, Point bn, int n, Side side1, Side side2,
                                       const Tolerance& tol = {}) {
  const double base_scale = std::max({distance(a1, an), distance(a1, bn), distance(an, bn)});
  if (distance(a1, an) <= tol.abs || distance(a1, bn) <= tol.abs) {
    throw Error(ErrorCode::DegenerateTriangle, "apex coincides with a base vertex");
  }
  if (distance(an, bn) <= tol.abs) {
    throw Error(ErrorCode::DegenerateTriangle, "base vertices coincide");
  }
  if (side1 == side2) {
    throw Error(ErrorCode::InvalidSides, "side selectors must differ so the polygons have opposite orientation");
  }
  RegularPolygon poly1 = from_side(a1, an, n, side1, tol);
  RegularPolygon poly2 = from_side(a1, bn, n, side2, tol);
  const Point d1 = diametric_opposite(poly1, a1, tol);
  const Point d2 = diametric_opposite(poly2, a1, tol);
  const Point m1 = midpoint(d1, d2);

  const double twice_area = std::abs(cross(an - a1, bn - a1));
  const bool collinear = tol.negligible(twice_area, base_scale * base_scale);

  // m2: the other point on Circle(O2, R1) and Circle(O1, R2). equal_distance_points reports only a
  // locus for congruent polygons (isosceles apex), so intersect directly in that case.
  std::optional<Point> m2;
  bool m2_coincident = false;
  const EqualDistanceSolution sol = equal_distance_points(poly1, poly2, tol);
  if (sol.m2) {
    m2 = tol.points_equal(*sol.m1, m1, base_scale) ? *sol.m2 : *sol.m1;
    m2_coincident = sol.coincident;
  } else {
    const auto hit = circle_intersection(Circle(poly2.centroid(), poly1.circumradius()),
                                         Circle(poly1.centroid(), poly2.circumradius()), tol);
    if (const auto* two = std::get_if<intersection::TwoPoints>(&hit)) {
      m2 = distance(two->left, m1) > distance(two->right, m1) ? two->left : two->right;
    } else {
      m2 = m1;
      m2_coincident = true;
    }
  }

  return BottemaResult{poly1,
                       poly2,
                       d1,
                       d2,
                       m1,
                       *m2,
                       project_onto_line(m1, an, bn, tol),
                       collinear,
                       m2_coincident};
}

/// Exterior placement; a collinear apex falls back to (Right, Left).
inline BottemaResult bottema_construct(Point an, Point a1, Point bn, int n, const Tolerance& tol = {}) {
  const auto [s1, s2] = exterior_sides(an, a1, bn);
  return bottema_construct(an, a1, bn, n, s1, s2, tol);
}

/// Centre of the regular n-gon on segment an-bn, on side `normal_side` of the directed line an -> bn.
inline Point closed_form_midpoint(Point an, Point bn, int n, Side normal_side, const Tolerance& tol = {}) {
  if (n < 3) throw Error(ErrorCode::InvalidN, "n must be >= 3");
  const Point base = bn - an;
  const double len = norm(base);
  if (len <= tol.abs) throw Error(ErrorCode::DegenerateSide, "base endpoints coincide");
  const double altitude = 0.5 * len / std::tan(kPi / n);
  return midpoint(an, bn) + altitude * static_cast<double>(sign(normal_side)) * perp(base) / len;
}

/// Side of an -> bn on which M1 lands for the given selector of the first polygon.
inline Side midpoint_side(Side side1) { return flip(side1); }

struct IndependenceReport {
  Point reference;                 // closed-form M1
  double max_deviation = 0.0;      // max pairwise distance between sampled M1
  double max_closed_form_error = 0.0;
  double bound = 0.0;
  int samples = 0;
  bool pass = false;
};

/// Samples apexes strictly left of an -> bn (exterior placement, selectors Right/Left) and measures how
/// far the resulting M1 spread, and how far they sit from the closed form.
inline IndependenceReport verify_independence(Point an, Point bn, int n, int samples, const Tolerance& tol = {},
                                              std::uint64_t seed = 1) {
  if (samples < 2) throw Error(ErrorCode::ValidationError, "need at least two apex samples");
  const Point base = bn - an;
  const double len = norm(base);
  if (len <= tol.abs) throw Error(ErrorCode::DegenerateSide, "base endpoints coincide");
  const Point along = base / len;
  const Point normal = perp(along);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> offset(-1.0, 2.0);
  std::uniform_real_distribution<double> height(0.1, 2.0);

  IndependenceReport report;
  report.samples = samples;
  report.reference = closed_form_midpoint(an, bn, n, midpoint_side(Side::Right), tol);
  report.bound = tol.bound(len);
  std::vector<Point> found;
  found.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const Point apex = an + (offset(rng) * len) * along + (height(rng) * len) * normal;
    const BottemaResult r = bottema_construct(an, apex, bn, n, Side::Right, Side::Left, tol);
    found.push_back(r.m1);
    report.max_closed_form_error = std::max(report.max_closed_form_error, distance(r.m1, report.reference));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      report.max_deviation = std::max(report.max_deviation, distance(found[i], found[j]));
    }
  }
  report.pass = report.max_deviation <= report.bound && report.max_closed_form_error <= report.bound;
  return report;
}

struct AngleRow {
  int k = 0;
  double measured = 0.0;  // unsigned angle A_k M1 B_k
  double nominal = 0.0;   // 2 pi (k - 1) / n
  double expected = 0.0;  // nominal folded into [0, pi]
  double residual = 0.0;
  bool pass = false;
};

struct AngleTable {
  std::vector<AngleRow> rows;  // k = 2..n
  double max_residual = 0.0;
  bool pass = true;
};

inline AngleTable vertex_angles(const BottemaResult& result, const Tolerance& tol = {}) {
  const int n = result.poly1.n();
  AngleTable table;
  for (int k = 2; k <= n; ++k) {
    AngleRow row;
    row.k = k;
    row.measured = angle_at(result.m1, result.poly1.vertex(k), result.poly2.vertex(k), tol);
    row.nominal = kTwoPi * (k - 1) / n;
    row.expected = std::min(row.nominal, kTwoPi - row.nominal);
    row.residual = std::abs(row.measured - row.expected);
    row.pass = row.residual <= tol.bound(1.0);  // radians
    table.max_residual = std::max(table.max_residual, row.residual);
    table.pass = table.pass && row.pass;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace polyeq
