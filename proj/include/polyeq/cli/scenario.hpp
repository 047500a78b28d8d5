#pragma once

// JSON scenario documents: one self-describing file per configuration to verify or render.
//
//   {"kind": "shared_vertex", "n": 4, "tolerance": {"rel": 1e-9, "abs": 1e-12}, "seed": 7,
//    "shared_vertex": {"vertex": [0, 0], "centroid1": [1, 1], "centroid2": [-2, 2],
//                      "orient1": -1, "orient2": 1}}

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "polyeq/error.hpp"
#include "polyeq/geometry.hpp"

namespace polyeq::cli {

using nlohmann::json;

enum class ScenarioKind { Pair, SharedVertex, Bottema, IdentityCheck };

inline constexpr std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Pair: return "pair";
    case ScenarioKind::SharedVertex: return "shared_vertex";
    case ScenarioKind::Bottema: return "bottema";
    case ScenarioKind::IdentityCheck: return "identity_check";
  }
  return "unknown";
}

inline std::optional<ScenarioKind> kind_from_string(std::string_view name) {
  for (auto k : {ScenarioKind::Pair, ScenarioKind::SharedVertex, ScenarioKind::Bottema, ScenarioKind::IdentityCheck}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

struct PairParams {
  Point centroid1;
  double r1 = 1.0;
  double phase1 = 0.0;
  int orient1 = 1;
  Point centroid2;
  double r2 = 1.0;
  double phase2 = 0.0;
  int orient2 = 1;
  friend bool operator==(const PairParams&, const PairParams&) = default;
};

struct SharedVertexParams {
  Point vertex;
  Point centroid1;
  Point centroid2;
  int orient1 = -1;
  int orient2 = 1;
  friend bool operator==(const SharedVertexParams&, const SharedVertexParams&) = default;
};

struct BottemaParams {
  Point an;
  Point a1;
  Point bn;
  int side1 = -1;
  int side2 = 1;
  int sweep_samples = 0;  // 0 disables the apex sweep
  friend bool operator==(const BottemaParams&, const BottemaParams&) = default;
};

struct IdentityCheckParams {
  Point centroid;
  double r = 1.0;
  double phase = 0.0;
  int orient = 1;
  std::vector<Point> probes;
  int max_m = 0;  // 0 means n - 1
  friend bool operator==(const IdentityCheckParams&, const IdentityCheckParams&) = default;
};

using ScenarioParams = std::variant<PairParams, SharedVertexParams, BottemaParams, IdentityCheckParams>;

struct Scenario {
  ScenarioKind kind = ScenarioKind::Pair;
  int n = 3;
  std::optional<Tolerance> tolerance;
  std::uint64_t seed = 0;
  ScenarioParams params;

  Tolerance effective_tolerance() const { return tolerance.value_or(Tolerance{}); }
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Malformed document; position is the byte offset reported by the JSON parser.
class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError, "at byte " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed document with a missing, unknown or out-of-range field.
class ValidationFailure : public Error {
 public:
  ValidationFailure(std::string field, const std::string& message)
      : Error(ErrorCode::ValidationError, field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

namespace detail {

inline void reject_unknown(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ValidationFailure(where.empty() ? key : where + "." + key, "unknown field");
  }
}

inline const json& require(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationFailure(where + key, "missing");
  return *it;
}

inline double read_real(const json& obj, const std::string& where, const char* key) {
  const json& v = require(obj, where, key);
  if (!v.is_number()) throw ValidationFailure(where + key, "expected a number");
  const double out = v.get<double>();
  if (!std::isfinite(out)) throw ValidationFailure(where + key, "must be finite");
  return out;
}

inline std::int64_t read_int(const json& obj, const std::string& where, const char* key) {
  const json& v = require(obj, where, key);
  if (!v.is_number_integer()) throw ValidationFailure(where + key, "expected an integer");
  return v.get<std::int64_t>();
}

inline int read_sign(const json& obj, const std::string& where, const char* key) {
  const auto v = read_int(obj, where, key);
  if (v != 1 && v != -1) throw ValidationFailure(where + key, "must be +1 or -1");
  return static_cast<int>(v);
}

inline Point to_point(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ValidationFailure(field, "expected [x, y]");
  }
  const double x = v[0].get<double>();
  const double y = v[1].get<double>();
  if (!std::isfinite(x) || !std::isfinite(y)) throw ValidationFailure(field, "coordinates must be finite");
  return {x, y};
}

inline Point read_point(const json& obj, const std::string& where, const char* key) {
  return to_point(require(obj, where, key), where + key);
}

inline double read_radius(const json& obj, const std::string& where, const char* key) {
  const double r = read_real(obj, where, key);
  if (r <= 0.0) throw ValidationFailure(where + key, "must be positive");
  return r;
}

inline json point_json(Point p) { return json::array({p.x, p.y}); }

}  // namespace detail

inline Scenario scenario_from_json(const json& doc) {
  using namespace detail;
  if (!doc.is_object()) throw ValidationFailure("document", "expected a JSON object");
  const json& kind_v = require(doc, "", "kind");
  if (!kind_v.is_string()) throw ValidationFailure("kind", "expected a string");
  const auto kind = kind_from_string(kind_v.get<std::string>());
  if (!kind) throw ValidationFailure("kind", "unknown kind '" + kind_v.get<std::string>() + "'");

  const std::string block_name(to_string(*kind));
  reject_unknown(doc, "", {"kind", "n", "tolerance", "seed", block_name});

  Scenario s;
  s.kind = *kind;
  const auto n = read_int(doc, "", "n");
  if (n < 3) throw ValidationFailure("n", "must be >= 3");
  if (n > 100000) throw ValidationFailure("n", "unreasonably large");
  s.n = static_cast<int>(n);

  if (auto it = doc.find("tolerance"); it != doc.end()) {
    if (!it->is_object()) throw ValidationFailure("tolerance", "expected an object");
    reject_unknown(*it, "tolerance", {"rel", "abs"});
    const double rel = read_real(*it, "tolerance.", "rel");
    const double abs = read_real(*it, "tolerance.", "abs");
    if (rel <= 0.0) throw ValidationFailure("tolerance.rel", "must be positive");
    if (abs <= 0.0) throw ValidationFailure("tolerance.abs", "must be positive");
    s.tolerance = Tolerance(rel, abs);
  }
  if (doc.contains("seed")) {
    const json& v = doc.at("seed");
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw ValidationFailure("seed", "expected a non-negative integer");
    }
    s.seed = v.get<std::uint64_t>();
  }

  const json& block = require(doc, "", block_name.c_str());
  if (!block.is_object()) throw ValidationFailure(block_name, "expected an object");
  const std::string w = block_name + ".";

  switch (s.kind) {
    case ScenarioKind::Pair: {
      reject_unknown(block, block_name,
                     {"centroid1", "r1", "phase1", "orient1", "centroid2", "r2", "phase2", "orient2"});
      PairParams p;
      p.centroid1 = read_point(block, w, "centroid1");
      p.r1 = read_radius(block, w, "r1");
      p.phase1 = read_real(block, w, "phase1");
      p.orient1 = read_sign(block, w, "orient1");
      p.centroid2 = read_point(block, w, "centroid2");
      p.r2 = read_radius(block, w, "r2");
      p.phase2 = read_real(block, w, "phase2");
      p.orient2 = read_sign(block, w, "orient2");
      s.params = p;
      break;
    }
    case ScenarioKind::SharedVertex: {
      reject_unknown(block, block_name, {"vertex", "centroid1", "centroid2", "orient1", "orient2"});
      SharedVertexParams p;
      p.vertex = read_point(block, w, "vertex");
      p.centroid1 = read_point(block, w, "centroid1");
      p.centroid2 = read_point(block, w, "centroid2");
      p.orient1 = read_sign(block, w, "orient1");
      p.orient2 = read_sign(block, w, "orient2");
      if (p.vertex == p.centroid1) throw ValidationFailure(w + "centroid1", "coincides with the shared vertex");
      if (p.vertex == p.centroid2) throw ValidationFailure(w + "centroid2", "coincides with the shared vertex");
      s.params = p;
      break;
    }
    case ScenarioKind::Bottema: {
      reject_unknown(block, block_name, {"an", "a1", "bn", "side1", "side2", "sweep_samples"});
      BottemaParams p;
      p.an = read_point(block, w, "an");
      p.a1 = read_point(block, w, "a1");
      p.bn = read_point(block, w, "bn");
      p.side1 = read_sign(block, w, "side1");
      p.side2 = read_sign(block, w, "side2");
      if (p.side1 == p.side2) throw ValidationFailure(w + "side2", "must differ from side1");
      if (block.contains("sweep_samples")) {
        const auto v = read_int(block, w, "sweep_samples");
        if (v < 0 || v == 1 || v > 1000000) throw ValidationFailure(w + "sweep_samples", "must be 0 or >= 2");
        p.sweep_samples = static_cast<int>(v);
      }
      s.params = p;
      break;
    }
    case ScenarioKind::IdentityCheck: {
      reject_unknown(block, block_name, {"centroid", "r", "phase", "orient", "probes", "max_m"});
      IdentityCheckParams p;
      p.centroid = read_point(block, w, "centroid");
      p.r = read_radius(block, w, "r");
      p.phase = read_real(block, w, "phase");
      p.orient = read_sign(block, w, "orient");
      const json& probes = require(block, w, "probes");
      if (!probes.is_array() || probes.empty()) throw ValidationFailure(w + "probes", "expected a non-empty array");
      for (std::size_t i = 0; i < probes.size(); ++i) {
        p.probes.push_back(to_point(probes[i], w + "probes[" + std::to_string(i) + "]"));
      }
      if (block.contains("max_m")) {
        const auto v = read_int(block, w, "max_m");
        if (v < 1 || v > s.n - 1) throw ValidationFailure(w + "max_m", "must lie in 1..n-1");
        p.max_m = static_cast<int>(v);
      }
      s.params = p;
      break;
    }
  }
  return s;
}

inline Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseFailure(e.byte, e.what());
  }
  return scenario_from_json(doc);
}

inline json scenario_to_json(const Scenario& s) {
  using detail::point_json;
  json doc;
  doc["kind"] = std::string(to_string(s.kind));
  doc["n"] = s.n;
  if (s.tolerance) doc["tolerance"] = {{"rel", s.tolerance->rel}, {"abs", s.tolerance->abs}};
  doc["seed"] = s.seed;
  const std::string block(to_string(s.kind));
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PairParams>) {
          doc[block] = {{"centroid1", point_json(p.centroid1)}, {"r1", p.r1}, {"phase1", p.phase1},
                        {"orient1", p.orient1}, {"centroid2", point_json(p.centroid2)}, {"r2", p.r2},
                        {"phase2", p.phase2}, {"orient2", p.orient2}};
        } else if constexpr (std::is_same_v<T, SharedVertexParams>) {
          doc[block] = {{"vertex", point_json(p.vertex)}, {"centroid1", point_json(p.centroid1)},
                        {"centroid2", point_json(p.centroid2)}, {"orient1", p.orient1}, {"orient2", p.orient2}};
        } else if constexpr (std::is_same_v<T, BottemaParams>) {
          doc[block] = {{"an", point_json(p.an)}, {"a1", point_json(p.a1)}, {"bn", point_json(p.bn)},
                        {"side1", p.side1}, {"side2", p.side2}, {"sweep_samples", p.sweep_samples}};
        } else {
          json probes = json::array();
          for (const Point& q : p.probes) probes.push_back(point_json(q));
          doc[block] = {{"centroid", point_json(p.centroid)}, {"r", p.r}, {"phase", p.phase},
                        {"orient", p.orient}, {"probes", probes}};
          if (p.max_m != 0) doc[block]["max_m"] = p.max_m;
        }
      },
      s.params);
  return doc;
}

inline std::string serialize_scenario(const Scenario& s) { return scenario_to_json(s).dump(2) + "\n"; }

}  // namespace polyeq::cli
