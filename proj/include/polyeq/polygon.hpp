#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "polyeq/error.hpp"
#include "polyeq/geometry.hpp"

namespace polyeq {

enum class Orientation : int { Clockwise = -1, CounterClockwise = 1 };

inline int sign(Orientation o) { return static_cast<int>(o); }
inline Orientation opposite(Orientation o) {
  return o == Orientation::Clockwise ? Orientation::CounterClockwise : Orientation::Clockwise;
}
inline Orientation orientation_from_int(int value) {
  if (value == 1) return Orientation::CounterClockwise;
  if (value == -1) return Orientation::Clockwise;
  throw Error(ErrorCode::ValidationError, "orientation must be +1 or -1");
}

// Half-plane relative to a directed segment.
enum class Side : int { Right = -1, Left = 1 };

inline int sign(Side s) { return static_cast<int>(s); }
inline Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline Side side_from_int(int value) {
  if (value == 1) return Side::Left;
  if (value == -1) return Side::Right;
  throw Error(ErrorCode::ValidationError, "side must be +1 or -1");
}

using VertexList = std::vector<Point>;

/// A regular n-gon. Vertex k (1-based) sits at
///   centroid + circumradius * (cos t_k, sin t_k),  t_k = phase + orientation * 2 pi (k - 1) / n.
class RegularPolygon {
 public:
  RegularPolygon(int n, Point centroid, double circumradius, double phase, Orientation orientation)
      : n_(n), centroid_(centroid), circumradius_(circumradius), orientation_(orientation) {
    if (n < 3) {
      throw Error(ErrorCode::InvalidN, "a regular polygon needs n >= 3, got " + std::to_string(n));
    }
    if (!std::isfinite(circumradius) || circumradius <= 0.0) {
      throw Error(ErrorCode::InvalidRadius, "circumradius must be positive and finite");
    }
    if (!std::isfinite(phase)) {
      throw Error(ErrorCode::ValidationError, "phase must be finite");
    }
    phase_ = normalize_angle(phase);
  }

  int n() const { return n_; }
  Point centroid() const { return centroid_; }
  double circumradius() const { return circumradius_; }
  double phase() const { return phase_; }
  Orientation orientation() const { return orientation_; }

  double side_length() const { return 2.0 * circumradius_ * std::sin(kPi / n_); }
  double apothem() const { return circumradius_ * std::cos(kPi / n_); }
  Circle circumcircle() const { return {centroid_, circumradius_}; }

  /// Angle of vertex k (1-based), not normalized.
  double vertex_angle(int k) const { return phase_ + sign(orientation_) * kTwoPi * (k - 1) / n_; }

  /// Vertex k, 1-based; indices wrap modulo n.
  Point vertex(int k) const {
    const int wrapped = ((k - 1) % n_ + n_) % n_ + 1;
    return centroid_ + from_polar(circumradius_, vertex_angle(wrapped));
  }

 private:
  int n_;
  Point centroid_;
  double circumradius_;
  double phase_ = 0.0;
  Orientation orientation_;
};

inline RegularPolygon make_polygon(int n, Point centroid, double circumradius, double phase,
                                   Orientation orientation) {
  return {n, centroid, circumradius, phase, orientation};
}

inline VertexList vertices(const RegularPolygon& poly) {
  VertexList out;
  out.reserve(static_cast<std::size_t>(poly.n()));
  for (int k = 1; k <= poly.n(); ++k) out.push_back(poly.vertex(k));
  return out;
}

/// Polygon through `a1` (as vertex 1) around `centroid`.
inline RegularPolygon from_shared_vertex(Point a1, Point centroid, int n, Orientation orientation,
                                         const Tolerance& tol = {}) {
  const Point arm = a1 - centroid;
  const double r = norm(arm);
  if (r <= tol.abs) {
    throw Error(ErrorCode::CoincidentVertexCentroid, "shared vertex coincides with centroid");
  }
  return {n, centroid, r, direction(arm), orientation};
}

/// Regular n-gon whose closing edge A_n -> A_1 is the segment an -> a1, with the polygon body
/// in the half-plane `side` of the directed line a1 -> an.
inline RegularPolygon from_side(Point a1, Point an, int n, Side side, const Tolerance& tol = {}) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidN, "a regular polygon needs n >= 3, got " + std::to_string(n));
  }
  const Point edge = an - a1;
  const double len = norm(edge);
  if (len <= tol.abs) {
    throw Error(ErrorCode::DegenerateSide, "side endpoints coincide");
  }
  const double half_angle = kPi / n;
  const double radius = len / (2.0 * std::sin(half_angle));
  const double apothem = 0.5 * len / std::tan(half_angle);
  const Point normal = static_cast<double>(sign(side)) * perp(edge) / len;
  const Point centroid = midpoint(a1, an) + apothem * normal;
  // Body on the left of a1 -> an means a1 -> an is traversed counterclockwise, so A1 -> A2 runs
  // the other way.
  const Orientation orientation = side == Side::Left ? Orientation::Clockwise : Orientation::CounterClockwise;
  return {n, centroid, radius, direction(a1 - centroid), orientation};
}

inline RegularPolygon rotate_about_centroid(const RegularPolygon& poly, double delta) {
  return {poly.n(), poly.centroid(), poly.circumradius(), poly.phase() + delta, poly.orientation()};
}

/// Mirror image across the line through a and b; orientation flips, vertex labels are kept.
inline RegularPolygon reflect_polygon(const RegularPolygon& poly, Point a, Point b, const Tolerance& tol = {}) {
  const Point centroid = reflect_across_line(poly.centroid(), a, b, tol);
  const double axis = direction(b - a);
  return {poly.n(), centroid, poly.circumradius(), 2.0 * axis - poly.phase(), opposite(poly.orientation())};
}

inline Point diametric_opposite(const RegularPolygon& poly, Point p, const Tolerance& tol = {}) {
  const double r = distance(p, poly.centroid());
  if (!tol.negligible(r - poly.circumradius(), poly.circumradius())) {
    throw Error(ErrorCode::NotOnCircumcircle, "point " + to_string(p) + " is not on the circumcircle");
  }
  return 2.0 * poly.centroid() - p;
}

}  // namespace polyeq
