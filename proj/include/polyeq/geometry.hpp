#pragma once

// Tolerance-aware planar primitives: points, circles, distances, angles and a
// circle-circle intersection that classifies tangency explicitly.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "polyeq/error.hpp"

namespace polyeq {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double px, double py) : x(px), y(py) {
    if (!std::isfinite(px) || !std::isfinite(py)) {
      throw Error(ErrorCode::InvalidPoint, "coordinates must be finite");
    }
  }

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
inline Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double norm_squared(Point a) { return dot(a, a); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline double distance_squared(Point a, Point b) { return norm_squared(a - b); }
inline Point midpoint(Point a, Point b) { return 0.5 * (a + b); }
inline Point perp(Point a) { return {-a.y, a.x}; }  // rotated +90 degrees
inline Point from_polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }
inline double direction(Point a) { return std::atan2(a.y, a.x); }

inline Point rotate(Point p, double theta, Point about = {}) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Point v = p - about;
  return about + Point{c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Maps an angle into (-pi, pi].
inline double normalize_angle(double theta) {
  double r = std::remainder(theta, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

/// Scale-aware comparison: u and v are equal iff |u - v| <= abs + rel * max(|u|, |v|).
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  Tolerance() = default;
  Tolerance(double relative, double absolute) : rel(relative), abs(absolute) {
    if (!(rel > 0.0) || !(abs > 0.0) || !std::isfinite(rel) || !std::isfinite(abs)) {
      throw Error(ErrorCode::ValidationError, "tolerance rel and abs must be positive and finite");
    }
  }

  bool equal(double u, double v) const {
    return std::abs(u - v) <= abs + rel * std::max(std::abs(u), std::abs(v));
  }
  // A residual is negligible relative to a characteristic magnitude `scale`.
  bool negligible(double residual, double scale) const {
    return std::abs(residual) <= abs + rel * std::abs(scale);
  }
  double bound(double scale) const { return abs + rel * std::abs(scale); }
  bool points_equal(Point a, Point b, double scale) const { return negligible(distance(a, b), scale); }

  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

class Circle {
 public:
  Circle(Point center, double radius) : center_(center), radius_(radius) {
    if (!std::isfinite(radius) || radius < 0.0) {
      throw Error(ErrorCode::InvalidCircle, "radius must be finite and non-negative");
    }
  }

  Point center() const { return center_; }
  double radius() const { return radius_; }
  bool degenerate() const { return radius_ == 0.0; }

 private:
  Point center_;
  double radius_;
};

namespace intersection {
struct TwoPoints {
  Point left;   // left of the directed line c1.center -> c2.center
  Point right;
};
struct Tangent {
  Point point;
};
struct Disjoint {};
struct Coincident {};
}  // namespace intersection

using IntersectionResult =
    std::variant<intersection::TwoPoints, intersection::Tangent, intersection::Disjoint, intersection::Coincident>;

inline IntersectionResult circle_intersection(const Circle& c1, const Circle& c2, const Tolerance& tol = {}) {
  using namespace intersection;
  const double r1 = c1.radius();
  const double r2 = c2.radius();
  if (c1.degenerate() && c2.degenerate()) {
    throw Error(ErrorCode::InvalidCircle, "both circles have zero radius");
  }
  const Point delta = c2.center() - c1.center();
  const double d = norm(delta);
  const double scale = std::max({r1, r2, d});

  // Concentric within tolerance: a direction between centers is meaningless.
  if (tol.negligible(d, std::max(r1, r2))) {
    if (tol.equal(r1, r2)) return Coincident{};
    return Disjoint{};
  }

  const Point u = delta / d;
  const double outer = r1 + r2;
  const double inner = std::abs(r1 - r2);
  const double a = std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d), -r1, r1);
  const Point foot = c1.center() + a * u;

  if (tol.equal(d, outer) || tol.equal(d, inner)) return Tangent{foot};
  if (d > outer || d < inner) return Disjoint{};

  const double h2 = r1 * r1 - a * a;
  if (h2 <= 0.0) return Tangent{foot};
  const double h = std::sqrt(h2);
  if (tol.negligible(2.0 * h, scale)) return Tangent{foot};

  const Point offset = h * perp(u);
  return TwoPoints{foot + offset, foot - offset};
}

inline double point_line_distance(Point p, Point a, Point b, const Tolerance& tol = {}) {
  const Point dir = b - a;
  const double len = norm(dir);
  if (len <= tol.abs) {
    throw Error(ErrorCode::DegenerateLine, "line endpoints coincide");
  }
  return std::abs(cross(dir, p - a)) / len;
}

inline Point project_onto_line(Point p, Point a, Point b, const Tolerance& tol = {}) {
  const Point dir = b - a;
  const double len2 = norm_squared(dir);
  if (std::sqrt(len2) <= tol.abs) {
    throw Error(ErrorCode::DegenerateLine, "line endpoints coincide");
  }
  return a + (dot(p - a, dir) / len2) * dir;
}

inline Point reflect_across_line(Point p, Point a, Point b, const Tolerance& tol = {}) {
  return 2.0 * project_onto_line(p, a, b, tol) - p;
}

/// Unsigned angle p-vertex-q in [0, pi].
inline double angle_at(Point vertex, Point p, Point q, const Tolerance& tol = {}) {
  const Point u = p - vertex;
  const Point v = q - vertex;
  const double lu = norm(u);
  const double lv = norm(v);
  if (lu <= tol.abs || lv <= tol.abs) {
    throw Error(ErrorCode::DegenerateRay, "angle arm has zero length");
  }
  const Point un = u / lu;
  const Point vn = v / lv;
  return std::atan2(std::abs(cross(un, vn)), dot(un, vn));
}

/// Signed angle rotating direction `from` onto direction `to`, in (-pi, pi].
inline double signed_angle(Point from, Point to) {
  return normalize_angle(std::atan2(cross(from, to), dot(from, to)));
}

inline std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

}  // namespace polyeq
