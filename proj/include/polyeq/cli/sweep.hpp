#pragma once

// Randomized property sweeps: generate scenarios of one kind, run them on a worker pool and merge
// the per-check statistics by configuration index, so the summary does not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "polyeq/cli/report.hpp"
#include "polyeq/cli/scenario.hpp"

namespace polyeq::cli {

struct SweepOptions {
  ScenarioKind kind = ScenarioKind::SharedVertex;
  int n_min = 3;
  int n_max = 12;
  int count = 100;
  std::uint64_t seed = 1;
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct CheckStats {
  int runs = 0;
  int failures = 0;
  double max_residual = 0.0;
};

struct SweepSummary {
  int configurations = 0;
  int failed_configurations = 0;
  int first_failure = -1;  // configuration index
  std::map<std::string, CheckStats> checks;  // keyed by check name with the [label] suffix stripped
  bool pass() const { return failed_configurations == 0; }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Scenario number `index` of a sweep; a pure function of (options, index).
inline Scenario generate_scenario(const SweepOptions& opt, int index) {
  std::mt19937_64 rng(mix_seed(opt.seed, static_cast<std::uint64_t>(index)));
  std::uniform_int_distribution<int> pick_n(opt.n_min, opt.n_max);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_real_distribution<double> radius(0.2, 5.0);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::bernoulli_distribution coin(0.5);

  Scenario s;
  s.kind = opt.kind;
  s.n = pick_n(rng);
  s.seed = mix_seed(opt.seed ^ 0x5eedULL, static_cast<std::uint64_t>(index));
  const int orient = coin(rng) ? 1 : -1;

  switch (opt.kind) {
    case ScenarioKind::Pair: {
      // Non-congruent radii with centroid distance strictly inside the intersection range.
      const double r1 = radius(rng);
      double r2 = radius(rng);
      if (std::abs(r1 - r2) < 0.05 * std::max(r1, r2)) r2 = r1 * 1.5;
      const double lo = std::abs(r1 - r2);
      const double hi = r1 + r2;
      std::uniform_real_distribution<double> gap(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo));
      const Point c1{coord(rng), coord(rng)};
      const Point c2 = c1 + from_polar(gap(rng), angle(rng));
      s.params = PairParams{c1, r1, angle(rng), orient, c2, r2, angle(rng), coin(rng) ? 1 : -1};
      break;
    }
    case ScenarioKind::SharedVertex: {
      const Point v{coord(rng), coord(rng)};
      const double r1 = radius(rng);
      double r2 = radius(rng);
      if (std::abs(r1 - r2) < 0.05 * std::max(r1, r2)) r2 = r1 * 1.5;
      const double a = angle(rng);
      std::uniform_real_distribution<double> spread(0.2, kPi - 0.2);
      const double b = a + (coin(rng) ? 1.0 : -1.0) * spread(rng);
      s.params = SharedVertexParams{v, v + from_polar(r1, a), v + from_polar(r2, b), orient, -orient};
      break;
    }
    case ScenarioKind::Bottema: {
      const Point an{coord(rng), coord(rng)};
      const Point bn = an + from_polar(0.5 + 4.5 * std::abs(coord(rng)) / 5.0, angle(rng));
      const Point along = (bn - an) / distance(an, bn);
      std::uniform_real_distribution<double> t(-1.0, 2.0);
      std::uniform_real_distribution<double> height(0.1, 2.0);
      const double len = distance(an, bn);
      const Point a1 = an + (t(rng) * len) * along + (height(rng) * len) * perp(along);
      s.params = BottemaParams{an, a1, bn, -1, 1, 10};
      break;
    }
    case ScenarioKind::IdentityCheck: {
      IdentityCheckParams p;
      p.centroid = {coord(rng), coord(rng)};
      p.r = radius(rng);
      p.phase = angle(rng);
      p.orient = orient;
      for (int i = 0; i < 3; ++i) p.probes.push_back(p.centroid + Point{2.0 * coord(rng), 2.0 * coord(rng)});
      s.params = p;
      break;
    }
  }
  return s;
}

inline std::string check_family(const std::string& name) {
  const auto pos = name.find('[');
  return pos == std::string::npos ? name : name.substr(0, pos);
}

inline SweepSummary run_sweep(const SweepOptions& opt) {
  std::vector<Report> reports(static_cast<std::size_t>(std::max(opt.count, 0)));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < opt.count; i = next++) {
      reports[static_cast<std::size_t>(i)] = run_scenario(generate_scenario(opt, i));
    }
  };
  unsigned threads = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(opt.count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  SweepSummary summary;
  summary.configurations = opt.count;
  for (int i = 0; i < opt.count; ++i) {
    const Report& r = reports[static_cast<std::size_t>(i)];
    if (!r.pass) {
      ++summary.failed_configurations;
      if (summary.first_failure < 0) summary.first_failure = i;
    }
    for (const auto& c : r.checks) {
      CheckStats& st = summary.checks[check_family(c.name)];
      ++st.runs;
      if (!c.pass) ++st.failures;
      if (std::isfinite(c.residual)) st.max_residual = std::max(st.max_residual, c.residual);
    }
  }
  return summary;
}

}  // namespace polyeq::cli
