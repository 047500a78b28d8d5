#pragma once

// Power sums of squared vertex distances, the closed-form cyclic average of a
// regular polygon, Newton's identities, and multiset comparison of distance lists.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "polyeq/error.hpp"
#include "polyeq/geometry.hpp"
#include "polyeq/polygon.hpp"

namespace polyeq {

/// Squared distances from one point to an ordered list of vertices.
class DistanceMultiset {
 public:
  DistanceMultiset(std::vector<double> squared, Point source, std::vector<int> labels)
      : squared_(std::move(squared)), source_(source), labels_(std::move(labels)) {
    if (squared_.empty()) throw Error(ErrorCode::ValidationError, "distance multiset must be non-empty");
    if (labels_.size() != squared_.size()) throw Error(ErrorCode::LengthMismatch, "labels and values differ in length");
    for (double v : squared_) {
      if (!std::isfinite(v) || v < 0.0) {
        throw Error(ErrorCode::ValidationError, "squared distances must be finite and non-negative");
      }
    }
  }

  /// Unlabelled values get labels 1..n.
  explicit DistanceMultiset(std::vector<double> squared, Point source = {})
      : DistanceMultiset(squared, source, default_labels(squared.size())) {}

  std::span<const double> values() const { return squared_; }
  std::span<const int> labels() const { return labels_; }
  Point source() const { return source_; }
  std::size_t size() const { return squared_.size(); }
  double operator[](std::size_t i) const { return squared_[i]; }
  double max() const { return *std::max_element(squared_.begin(), squared_.end()); }

 private:
  static std::vector<int> default_labels(std::size_t n) {
    std::vector<int> out(n);
    std::iota(out.begin(), out.end(), 1);
    return out;
  }

  std::vector<double> squared_;
  Point source_;
  std::vector<int> labels_;
};

/// p_1..p_K, stored 0-based (values[m - 1] = p_m).
struct PowerSumVector {
  std::vector<double> values;
  std::size_t order() const { return values.size(); }
};

/// e_1..e_K, stored 0-based (values[m - 1] = e_m).
struct ElementarySymmetricVector {
  std::vector<double> values;
  std::size_t order() const { return values.size(); }
};

inline DistanceMultiset distances_squared(std::span<const Point> verts, Point m_point) {
  if (verts.empty()) throw Error(ErrorCode::ValidationError, "vertex list is empty");
  std::vector<double> sq;
  sq.reserve(verts.size());
  for (const Point& v : verts) sq.push_back(distance_squared(v, m_point));
  return DistanceMultiset(std::move(sq), m_point);
}

/// sum_i (d_i^2)^m, evaluated as max^m * sum_i (d_i^2 / max)^m.
inline double power_sum_lhs(const DistanceMultiset& dm, int m) {
  if (m < 1) throw Error(ErrorCode::OrderOutOfRange, "power-sum order must be >= 1");
  const double top = dm.max();
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : dm.values()) sum += std::pow(v / top, m);
  return std::pow(top, m) * sum;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return std::round(out);
}

/// Cyclic average of a regular n-gon:
///   n [ (R^2 + L^2)^m + sum_{k=1}^{floor(m/2)} C(m, 2k) C(2k, k) R^2k L^2k (R^2 + L^2)^(m - 2k) ]
/// valid for m = 1..n-1.
inline double power_sum_closed_form(int n, double radius, double offset, int m) {
  if (n < 3) throw Error(ErrorCode::InvalidN, "n must be >= 3");
  if (m < 1 || m > n - 1) {
    throw Error(ErrorCode::OrderOutOfRange,
                "order " + std::to_string(m) + " outside 1.." + std::to_string(n - 1));
  }
  if (!std::isfinite(radius) || radius <= 0.0) throw Error(ErrorCode::InvalidRadius, "R must be positive");
  if (!std::isfinite(offset) || offset < 0.0) throw Error(ErrorCode::ValidationError, "L must be non-negative");
  const double r2 = radius * radius;
  const double l2 = offset * offset;
  const double s = r2 + l2;
  double bracket = std::pow(s, m);
  for (int k = 1; k <= m / 2; ++k) {
    bracket += binomial(m, 2 * k) * binomial(2 * k, k) * std::pow(r2 * l2, k) * std::pow(s, m - 2 * k);
  }
  return n * bracket;
}

struct IdentityRow {
  int m = 0;
  double direct = 0.0;
  double closed_form = 0.0;
  double rel_residual = 0.0;
  bool pass = false;
};

struct IdentityReport {
  Point probe;
  double offset = 0.0;  // |probe - centroid|
  std::vector<IdentityRow> rows;
  double max_rel_residual = 0.0;
  bool pass = true;
};

/// Compares direct power sums with the closed form for m = 1..max_m (default n - 1).
inline IdentityReport verify_identity(const RegularPolygon& poly, Point m_point, const Tolerance& tol = {},
                                      int max_m = 0) {
  const int top = max_m == 0 ? poly.n() - 1 : max_m;
  const VertexList verts = vertices(poly);
  const DistanceMultiset dm = distances_squared(verts, m_point);
  IdentityReport report;
  report.probe = m_point;
  report.offset = distance(m_point, poly.centroid());
  for (int m = 1; m <= top; ++m) {
    IdentityRow row;
    row.m = m;
    row.direct = power_sum_lhs(dm, m);
    row.closed_form = power_sum_closed_form(poly.n(), poly.circumradius(), report.offset, m);
    const double scale = std::max(std::abs(row.direct), std::abs(row.closed_form));
    row.rel_residual = scale > 0.0 ? std::abs(row.direct - row.closed_form) / scale : 0.0;
    row.pass = row.rel_residual <= tol.rel;
    report.max_rel_residual = std::max(report.max_rel_residual, row.rel_residual);
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

inline PowerSumVector power_sums(std::span<const double> values, std::size_t order) {
  PowerSumVector out;
  out.values.assign(order, 0.0);
  for (double x : values) {
    double term = 1.0;
    for (std::size_t m = 0; m < order; ++m) {
      term *= x;
      out.values[m] += term;
    }
  }
  return out;
}

/// Newton's identities: m e_m = sum_{i=1}^{m} (-1)^(i-1) e_(m-i) p_i, e_0 = 1.
inline ElementarySymmetricVector power_sums_to_elementary(const PowerSumVector& p) {
  if (p.order() < 1) throw Error(ErrorCode::OrderOutOfRange, "need at least one power sum");
  const std::size_t order = p.order();
  std::vector<double> e(order + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t m = 1; m <= order; ++m) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
      const double sgn = (i % 2 == 1) ? 1.0 : -1.0;
      acc += sgn * e[m - i] * p.values[i - 1];
    }
    e[m] = acc / static_cast<double>(m);
  }
  return {std::vector<double>(e.begin() + 1, e.end())};
}

struct MultisetComparison {
  bool equal = false;
  // permutation[i] = 1-based index into b matched with a[i]; populated when equal.
  std::vector<int> permutation;
  double max_residual = 0.0;  // over sorted pairs
  // Newton's-identities cross-check on max-normalized values.
  bool elementary_agree = false;
  double elementary_max_residual = 0.0;
};

namespace detail {
inline std::vector<std::size_t> stable_order(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
  return idx;
}

inline double common_max(const DistanceMultiset& a, const DistanceMultiset& b) {
  return std::max(a.max(), b.max());
}

inline std::vector<double> scaled(std::span<const double> v, double by) {
  std::vector<double> out(v.begin(), v.end());
  if (by > 0.0) {
    for (double& x : out) x /= by;
  }
  return out;
}
}  // namespace detail

/// Sorted pairwise comparison decides; Newton's identities are reported as a cross-check.
/// Pairs are compared against the largest entry of either list.
inline MultisetComparison multisets_equal(const DistanceMultiset& a, const DistanceMultiset& b,
                                          const Tolerance& tol = {}) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "multisets differ in length");
  const std::size_t n = a.size();
  const double scale = detail::common_max(a, b);
  const auto ia = detail::stable_order(a.values());
  const auto ib = detail::stable_order(b.values());

  MultisetComparison out;
  out.equal = true;
  for (std::size_t r = 0; r < n; ++r) {
    const double diff = std::abs(a[ia[r]] - b[ib[r]]);
    out.max_residual = std::max(out.max_residual, diff);
    if (!tol.negligible(diff, scale)) out.equal = false;
  }
  if (out.equal) {
    out.permutation.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) out.permutation[ia[r]] = static_cast<int>(ib[r]) + 1;
  }

  const auto na = detail::scaled(a.values(), scale);
  const auto nb = detail::scaled(b.values(), scale);
  const auto ea = power_sums_to_elementary(power_sums(na, n));
  const auto eb = power_sums_to_elementary(power_sums(nb, n));
  out.elementary_agree = true;
  for (std::size_t k = 0; k < n; ++k) {
    const double diff = std::abs(ea.values[k] - eb.values[k]);
    out.elementary_max_residual = std::max(out.elementary_max_residual, diff);
    // |e_k| of values in [0, 1] is bounded by C(n, k).
    const double bound = binomial(static_cast<int>(n), static_cast<int>(k + 1));
    if (!tol.negligible(diff, bound)) out.elementary_agree = false;
  }
  return out;
}

struct SystemRow {
  int m = 0;
  double lhs = 0.0;  // normalized power sum of the first list
  double rhs = 0.0;
  double rel_residual = 0.0;
  bool pass = false;
};

struct SystemReport {
  std::vector<SystemRow> rows;
  double max_rel_residual = 0.0;
  bool pass = true;
};

namespace detail {
inline SystemReport compare_power_sums(std::span<const double> a, std::span<const double> b, int top, double scale,
                                       const Tolerance& tol) {
  const auto na = scaled(a, scale);
  const auto nb = scaled(b, scale);
  const auto pa = power_sums(na, static_cast<std::size_t>(std::max(top, 0)));
  const auto pb = power_sums(nb, static_cast<std::size_t>(std::max(top, 0)));
  SystemReport report;
  for (int m = 1; m <= top; ++m) {
    SystemRow row;
    row.m = m;
    row.lhs = pa.values[m - 1];
    row.rhs = pb.values[m - 1];
    const double mag = std::max(std::abs(row.lhs), std::abs(row.rhs));
    row.rel_residual = mag > 0.0 ? std::abs(row.lhs - row.rhs) / mag : 0.0;
    row.pass = tol.negligible(row.lhs - row.rhs, mag);
    report.max_rel_residual = std::max(report.max_rel_residual, row.rel_residual);
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}
}  // namespace detail

/// Equal power sums of orders 1..n-1 between two distance lists of length n.
inline SystemReport verify_system_star(const DistanceMultiset& da, const DistanceMultiset& db,
                                       const Tolerance& tol = {}) {
  if (da.size() != db.size()) throw Error(ErrorCode::LengthMismatch, "distance lists differ in length");
  const int n = static_cast<int>(da.size());
  return detail::compare_power_sums(da.values(), db.values(), n - 1, detail::common_max(da, db), tol);
}

struct ReducedSystemReport {
  double pinned_residual = 0.0;  // |d_1^2 - t_1^2|
  bool pinned_pass = false;
  SystemReport rest;             // entries 2..n, orders 1..n-1
  bool pass = false;
};

/// The pinned pair d_1 = t_1 plus equal power sums of the remaining n-1 entries; by Newton's
/// identities this forces the remaining entries to agree as multisets.
inline ReducedSystemReport verify_reduced_system(const DistanceMultiset& da, const DistanceMultiset& db,
                                                 const Tolerance& tol = {}) {
  if (da.size() != db.size()) throw Error(ErrorCode::LengthMismatch, "distance lists differ in length");
  const double scale = detail::common_max(da, db);
  ReducedSystemReport out;
  out.pinned_residual = std::abs(da[0] - db[0]);
  out.pinned_pass = tol.negligible(out.pinned_residual, scale);
  const int n = static_cast<int>(da.size());
  out.rest = detail::compare_power_sums(da.values().subspan(1), db.values().subspan(1), n - 1, scale, tol);
  out.pass = out.pinned_pass && out.rest.pass;
  return out;
}

}  // namespace polyeq
