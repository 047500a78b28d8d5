#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "polyeq/cli/report.hpp"
#include "polyeq/cli/scenario.hpp"
#include "polyeq/cli/sweep.hpp"
#include "test_support.hpp"

namespace polyeq::cli {
namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(POLYEQ_SCENARIO_DIR) + "/" + name, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kSquares = R"({"kind": "shared_vertex", "n": 4,
  "shared_vertex": {"vertex": [0, 0], "centroid1": [1, 1], "centroid2": [-2, 2], "orient1": -1, "orient2": 1}})";

TEST(ParseScenario, SharedVertexExample) {
  const Scenario s = parse_scenario(kSquares);
  EXPECT_EQ(s.kind, ScenarioKind::SharedVertex);
  EXPECT_EQ(s.n, 4);
  EXPECT_FALSE(s.tolerance.has_value());
  const auto& p = std::get<SharedVertexParams>(s.params);
  EXPECT_EQ(p.centroid2, (Point{-2, 2}));
  EXPECT_EQ(p.orient1, -1);
}

TEST(ParseScenario, ToleranceOverride) {
  const Scenario s = parse_scenario(R"({"kind": "identity_check", "n": 5, "tolerance": {"rel": 1e-6, "abs": 1e-9},
    "identity_check": {"centroid": [0, 0], "r": 1, "phase": 0, "orient": 1, "probes": [[1, 1]], "max_m": 2}})");
  EXPECT_DOUBLE_EQ(s.effective_tolerance().rel, 1e-6);
  EXPECT_EQ(std::get<IdentityCheckParams>(s.params).max_m, 2);
}

void expect_field(const std::string& text, const std::string& field) {
  try {
    parse_scenario(text);
    FAIL() << "accepted: " << text;
  } catch (const ValidationFailure& e) {
    EXPECT_EQ(e.field(), field) << e.what();
    EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  }
}

TEST(ParseScenario, ValidationFailures) {
  expect_field(R"({"kind": "shared_vertex", "n": 2, "shared_vertex": {}})", "n");
  expect_field(R"({"kind": "triangle", "n": 3})", "kind");
  expect_field(R"({"kind": "pair", "n": 3, "extra": 1, "pair": {}})", "extra");
  expect_field(R"({"kind": "pair", "n": 3, "bottema": {}})", "bottema");
  expect_field(R"({"kind": "pair", "n": 3})", "pair");
  expect_field(R"({"kind": "pair", "n": 3, "pair": {"centroid1": [0, 0], "r1": -1, "phase1": 0, "orient1": 1,
    "centroid2": [1, 0], "r2": 1, "phase2": 0, "orient2": 1}})",
               "pair.r1");
  expect_field(R"({"kind": "pair", "n": 3, "pair": {"centroid1": [0, 0], "r1": 1, "phase1": 0, "orient1": 2,
    "centroid2": [1, 0], "r2": 1, "phase2": 0, "orient2": 1}})",
               "pair.orient1");
  expect_field(R"({"kind": "shared_vertex", "n": 4, "shared_vertex": {"vertex": [0, 0], "centroid1": [0, 0],
    "centroid2": [1, 1], "orient1": 1, "orient2": -1}})",
               "shared_vertex.centroid1");
  expect_field(R"({"kind": "bottema", "n": 4, "bottema": {"an": [0, 0], "a1": [1, 1], "bn": [2, 0],
    "side1": 1, "side2": 1}})",
               "bottema.side2");
  expect_field(R"({"kind": "identity_check", "n": 4, "identity_check": {"centroid": [0, 0], "r": 1, "phase": 0,
    "orient": 1, "probes": [[0, 0]], "max_m": 4}})",
               "identity_check.max_m");
  expect_field(R"({"kind": "identity_check", "n": 4, "identity_check": {"centroid": [0, 0], "r": 1, "phase": 0,
    "orient": 1, "probes": [[0]]}})",
               "identity_check.probes[0]");
}

TEST(ParseScenario, MalformedJson) {
  const std::string truncated = std::string(kSquares).substr(0, 40);
  try {
    parse_scenario(truncated);
    FAIL();
  } catch (const ParseFailure& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_GT(e.position(), 0u);
  }
}

TEST(ParseScenario, ShippedFilesRoundTrip) {
  for (const char* name : {"shared_vertex_squares.json", "shared_vertex_collinear.json", "pair_generic.json",
                           "pair_disjoint.json", "pair_congruent_mirror.json", "bottema_squares.json",
                           "identity_heptagon.json"}) {
    const Scenario s = parse_scenario(read_file(name));
    const std::string text = serialize_scenario(s);
    EXPECT_EQ(parse_scenario(text), s) << name;
    EXPECT_EQ(serialize_scenario(parse_scenario(text)), text) << name;
  }
}

TEST(ScenarioProperty, GeneratedScenariosRoundTrip) {
  for (auto kind : {ScenarioKind::Pair, ScenarioKind::SharedVertex, ScenarioKind::Bottema, ScenarioKind::IdentityCheck}) {
    SweepOptions opt;
    opt.kind = kind;
    opt.seed = 77;
    for (int i = 0; i < 100; ++i) {
      const Scenario s = generate_scenario(opt, i);
      EXPECT_EQ(parse_scenario(serialize_scenario(s)), s);
      EXPECT_EQ(generate_scenario(opt, i), s);
    }
  }
}

TEST(RunScenario, SharedVertexSquares) {
  const Report r = run_scenario(parse_scenario(read_file("shared_vertex_squares.json")));
  EXPECT_TRUE(r.pass) << report_to_text(r);
  EXPECT_EQ(r.classification, "NonCongruent");
  ASSERT_NE(r.point("M1"), nullptr);
  EXPECT_NEAR(r.point("M1")->point.x, -1, 1e-12);
  EXPECT_NEAR(r.point("M1")->point.y, 3, 1e-12);
  EXPECT_NEAR(r.point("M2")->point.x, -1.8, 1e-12);
  EXPECT_NEAR(r.point("M2")->point.y, 0.6, 1e-12);
  for (const char* name : {"opposite_vertex_midpoint", "antipode_midpoint", "m2_bisector_and_parallel",
                           "m1m2_length", "parallelogram_closure", "m1m2_perpendicular"}) {
    ASSERT_NE(r.check(name), nullptr) << name;
    EXPECT_TRUE(r.check(name)->pass) << name;
  }
}

TEST(RunScenario, DisjointIsAValidFinding) {
  const Report r = run_scenario(parse_scenario(read_file("pair_disjoint.json")));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.points.empty());
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_NE(r.findings[0].find("no equal-distance point"), std::string::npos);
}

TEST(RunScenario, ShippedFilesPass) {
  for (const char* name : {"shared_vertex_collinear.json", "pair_generic.json", "pair_congruent_mirror.json",
                           "bottema_squares.json", "identity_heptagon.json"}) {
    const Report r = run_scenario(parse_scenario(read_file(name)));
    EXPECT_TRUE(r.pass) << name << "\n" << report_to_text(r);
    EXPECT_FALSE(r.checks.empty()) << name;
  }
}

TEST(RunScenario, BottemaSquaresPoints) {
  const Report r = run_scenario(parse_scenario(read_file("bottema_squares.json")));
  ASSERT_NE(r.point("M1"), nullptr);
  // Selectors (-1, 1) put the squares outside the triangle for an apex above the base.
  EXPECT_NEAR(r.point("M1")->point.x, 1, 1e-12);
  EXPECT_NEAR(r.point("M1")->point.y, 1, 1e-12);
  EXPECT_NE(r.check("independence_sweep"), nullptr);
}

TEST(RunScenario, Deterministic) {
  const Scenario s = parse_scenario(read_file("pair_congruent_mirror.json"));
  EXPECT_EQ(report_to_json(run_scenario(s)).dump(), report_to_json(run_scenario(s)).dump());
}

TEST(Sweep, SummaryIndependentOfWorkerCount) {
  SweepOptions opt;
  opt.kind = ScenarioKind::SharedVertex;
  opt.count = 60;
  opt.seed = 5;
  opt.workers = 1;
  const auto one = run_sweep(opt);
  opt.workers = 4;
  const auto four = run_sweep(opt);
  EXPECT_TRUE(one.pass());
  EXPECT_EQ(one.failed_configurations, four.failed_configurations);
  ASSERT_EQ(one.checks.size(), four.checks.size());
  for (const auto& [name, st] : one.checks) {
    EXPECT_EQ(st.runs, four.checks.at(name).runs);
    EXPECT_EQ(st.max_residual, four.checks.at(name).max_residual);
  }
}

TEST(Sweep, EveryKindPasses) {
  for (auto kind : {ScenarioKind::Pair, ScenarioKind::Bottema, ScenarioKind::IdentityCheck}) {
    SweepOptions opt;
    opt.kind = kind;
    opt.count = 100;
    opt.seed = 3;
    const auto summary = run_sweep(opt);
    EXPECT_TRUE(summary.pass()) << to_string(kind) << " first failure " << summary.first_failure;
  }
}

}  // namespace
}  // namespace polyeq::cli
