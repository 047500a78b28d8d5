#include <gtest/gtest.h>

#include <cmath>

#include "polyeq/equalizer.hpp"
#include "test_support.hpp"

namespace polyeq {
namespace {

using testing::Gen;

constexpr double kEps = 1e-12;

void expect_point_near(Point got, Point want, double eps = kEps) {
  EXPECT_NEAR(got.x, want.x, eps) << to_string(got);
  EXPECT_NEAR(got.y, want.y, eps) << to_string(got);
}

// Two squares sharing the vertex (0,0), centred at (1,1) and (-2,2), opposite orientations.
struct SquaresFixture {
  RegularPolygon p1 = from_shared_vertex({0, 0}, {1, 1}, 4, Orientation::Clockwise);
  RegularPolygon p2 = from_shared_vertex({0, 0}, {-2, 2}, 4, Orientation::CounterClockwise);
};

TEST(MatchedIndex, ReversalOfHexagon) {
  const std::vector<int> want{1, 6, 5, 4, 3, 2};
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(matched_index(MatchKind::Reversal, k, 6), want[static_cast<std::size_t>(k - 1)]);
    EXPECT_EQ(matched_index(MatchKind::Identity, k, 6), k);
  }
}

TEST(ClassifyPair, Examples) {
  const auto a = make_polygon(5, {0, 0}, 2, 0, Orientation::CounterClockwise);
  EXPECT_EQ(classify_pair(a, make_polygon(5, {0, 0}, 2, 1.1, Orientation::Clockwise)), CaseKind::CongruentSameCentroid);
  EXPECT_EQ(classify_pair(a, make_polygon(5, {3, 1}, 2, 0, Orientation::Clockwise)),
            CaseKind::CongruentDistinctCentroids);
  EXPECT_EQ(classify_pair(a, make_polygon(5, {0, 0}, 3, 0, Orientation::Clockwise)), CaseKind::NonCongruent);
  try {
    classify_pair(a, make_polygon(6, {0, 0}, 2, 0, Orientation::Clockwise));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedN);
  }
}

TEST(EqualDistancePoints, SharedVertexSquares) {
  SquaresFixture f;
  const auto sol = equal_distance_points(f.p1, f.p2);
  ASSERT_EQ(sol.point_count(), 2);
  EXPECT_EQ(sol.kind, CaseKind::NonCongruent);
  expect_point_near(*sol.m1, {-1, 3});
  expect_point_near(*sol.m2, {-1.8, 0.6});
  for (Point m : {*sol.m1, *sol.m2}) {
    EXPECT_NEAR(distance(m, {-2, 2}), std::sqrt(2.0), kEps);
    EXPECT_NEAR(distance(m, {1, 1}), 2 * std::sqrt(2.0), kEps);
  }
}

TEST(EqualDistancePoints, TangentGivesOnePoint) {
  const auto p1 = make_polygon(4, {3, 0}, 2, 0, Orientation::CounterClockwise);
  const auto p2 = make_polygon(4, {0, 0}, 1, 0, Orientation::Clockwise);
  const auto sol = equal_distance_points(p1, p2);
  ASSERT_EQ(sol.point_count(), 1);
  EXPECT_TRUE(sol.coincident);
  expect_point_near(*sol.m1, {2, 0});
  expect_point_near(*sol.m2, {2, 0});
}

TEST(EqualDistancePoints, DisjointGivesNone) {
  const auto p1 = make_polygon(3, {0, 0}, 1, 0, Orientation::CounterClockwise);
  const auto p2 = make_polygon(3, {10, 0}, 2, 0, Orientation::Clockwise);
  const auto sol = equal_distance_points(p1, p2);
  EXPECT_EQ(sol.point_count(), 0);
  EXPECT_EQ(sol.locus, Locus::None);
}

TEST(EqualDistancePoints, CongruentLocus) {
  const auto a = make_polygon(5, {0, 0}, 2, 0, Orientation::CounterClockwise);
  EXPECT_EQ(equal_distance_points(a, make_polygon(5, {0, 0}, 2, 0.3, Orientation::Clockwise)).locus,
            Locus::EntirePlane);
  const auto mirrored = equal_distance_points(a, make_polygon(5, {4, 0}, 2, kPi, Orientation::Clockwise));
  EXPECT_EQ(mirrored.locus, Locus::PerpendicularBisector);
  EXPECT_EQ(mirrored.point_count(), 0);
}

TEST(AlignRotation, FixedPointWhenAlreadyAligned) {
  const auto p2 = make_polygon(5, {1, -1}, 2, 0.4, Orientation::Clockwise);
  const Point m{4, 3};
  const auto candidates = align_rotation(p2, m, distance(m, p2.vertex(1)));
  ASSERT_EQ(candidates.size(), 2u);
  double best = INFINITY;
  for (const auto& c : candidates) best = std::min(best, distance(c.vertex(1), p2.vertex(1)));
  EXPECT_LT(best, 1e-12);
}

TEST(AlignRotation, CandidatesHitRequestedDistance) {
  Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const auto p2 = make_polygon(g.integer(3, 9), g.point(3), g.uniform(0.5, 3), g.angle(), g.orientation());
    const Point m = g.point(6);
    const double l = distance(m, p2.centroid());
    const double d1 = g.uniform(std::abs(l - p2.circumradius()) + 1e-3, l + p2.circumradius() - 1e-3);
    for (const auto& c : align_rotation(p2, m, d1)) {
      EXPECT_NEAR(distance(m, c.vertex(1)), d1, 1e-9 * std::max(d1, l));
      EXPECT_EQ(c.orientation(), p2.orientation());
      EXPECT_EQ(c.centroid(), p2.centroid());
    }
  }
}

TEST(AlignRotation, ZeroDistanceOffCircumcircle) {
  const auto p2 = make_polygon(4, {0, 0}, 1, 0, Orientation::Clockwise);
  try {
    align_rotation(p2, {3, 0}, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoIntersection);
  }
}

TEST(Correspondence, SquaresIdentityAtM1ReversalAtM2) {
  SquaresFixture f;
  const auto sol = equal_distance_points(f.p1, f.p2);
  const auto at_m1 = correspondence(f.p1, f.p2, *sol.m1);
  EXPECT_EQ(at_m1.kind, MatchKind::Identity);
  EXPECT_TRUE(at_m1.cosine_model_pass);
  const auto at_m2 = correspondence(f.p1, f.p2, *sol.m2);
  EXPECT_EQ(at_m2.kind, MatchKind::Reversal);
  EXPECT_TRUE(at_m2.cosine_model_pass);
  const Point m2 = *sol.m2;
  EXPECT_NEAR(distance(m2, f.p1.vertex(2)), distance(m2, f.p2.vertex(4)), kEps);
  EXPECT_NEAR(distance(m2, f.p1.vertex(3)), distance(m2, f.p2.vertex(3)), kEps);
  EXPECT_NEAR(distance(m2, f.p1.vertex(4)), distance(m2, f.p2.vertex(2)), kEps);
}

TEST(Correspondence, RejectsUnpinnedPoint) {
  SquaresFixture f;
  try {
    correspondence(f.p1, f.p2, {5, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoMatching);
  }
}

TEST(SystemStar, HoldsAtSolutionsFailsElsewhere) {
  SquaresFixture f;
  const auto sol = equal_distance_points(f.p1, f.p2);
  EXPECT_TRUE(system_star_at(f.p1, f.p2, *sol.m1).pass);
  EXPECT_TRUE(system_star_at(f.p1, f.p2, *sol.m2).pass);
  EXPECT_FALSE(system_star_at(f.p1, f.p2, {0.5, 0.5}).pass);
}

TEST(PointProperties, SquaresAllHold) {
  SquaresFixture f;
  const auto report = verify_point_properties(f.p1, f.p2, equal_distance_points(f.p1, f.p2));
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.checks.size(), 6u);
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.pass) << c.name;
    EXPECT_FALSE(c.vacuous) << c.name;
  }
  expect_point_near(report.d1, {2, 2});
  expect_point_near(report.d2, {-4, 4});
}

TEST(PointProperties, OddNMarksOppositeVertexVacuous) {
  const auto p1 = from_shared_vertex({0, 0}, {1, 0.5}, 5, Orientation::CounterClockwise);
  const auto p2 = from_shared_vertex({0, 0}, {-1, 2}, 5, Orientation::Clockwise);
  const auto report = verify_point_properties(p1, p2, equal_distance_points(p1, p2));
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.find("opposite_vertex_midpoint")->vacuous);
}

TEST(PointProperties, TangentCollinearCase) {
  const auto p1 = from_shared_vertex({0, 0}, {1, 0}, 6, Orientation::CounterClockwise);
  const auto p2 = from_shared_vertex({0, 0}, {-3, 0}, 6, Orientation::Clockwise);
  const auto sol = equal_distance_points(p1, p2);
  ASSERT_EQ(sol.point_count(), 1);
  expect_point_near(*sol.m1, {-2, 0});
  const auto report = verify_point_properties(p1, p2, sol);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.coincident);
  EXPECT_TRUE(report.find("m2_bisector_and_parallel")->vacuous);
  EXPECT_TRUE(report.find("m1m2_length")->vacuous);
  EXPECT_TRUE(report.find("m1m2_perpendicular")->vacuous);
  EXPECT_FALSE(report.find("antipode_midpoint")->vacuous);
}

TEST(PointProperties, RequiresSharedVertexAndPoints) {
  const auto p1 = make_polygon(4, {0, 0}, 1, 0, Orientation::CounterClockwise);
  const auto p2 = make_polygon(4, {3, 0}, 2, 0, Orientation::Clockwise);
  try {
    verify_point_properties(p1, p2, equal_distance_points(p1, p2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSharedVertex);
  }
  SquaresFixture f;
  try {
    verify_point_properties(f.p1, f.p2, EqualDistanceSolution{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTwoPointSolution);
  }
}

// O2 M1 O1 M2 read as a quadrilateral has sides R1, R2, R2, R1: its diagonals do not bisect each
// other unless R1 = R2.
TEST(PointProperties, LiteralDiagonalBisectionNeedsEqualRadii) {
  SquaresFixture f;
  const auto sol = equal_distance_points(f.p1, f.p2);
  const Point mid_m = midpoint(*sol.m1, *sol.m2);
  const Point mid_o = midpoint(f.p1.centroid(), f.p2.centroid());
  expect_point_near(mid_m, {-1.4, 1.8});
  expect_point_near(mid_o, {-0.5, 1.5});
  EXPECT_TRUE(verify_point_properties(f.p1, f.p2, sol).find("parallelogram_closure")->pass);
}

struct RandomSharedVertexPair {
  RegularPolygon p1;
  RegularPolygon p2;
};

RandomSharedVertexPair random_shared_vertex_pair(Gen& g) {
  const int n = g.integer(3, 12);
  const Point v = g.point(5);
  const double r1 = g.uniform(0.2, 5);
  double r2 = g.uniform(0.2, 5);
  if (std::abs(r1 - r2) < 0.05 * std::max(r1, r2)) r2 = 1.5 * r1;
  const double a = g.angle();
  const double b = a + (g.coin() ? 1 : -1) * g.uniform(0.2, kPi - 0.2);
  const Orientation o = g.orientation();
  return {from_shared_vertex(v, v + from_polar(r1, a), n, o), from_shared_vertex(v, v + from_polar(r2, b), n, opposite(o))};
}

TEST(EqualizerProperty, SharedVertexPointsAndMatchings) {
  Gen g(31);
  for (int i = 0; i < 500; ++i) {
    const auto [p1, p2] = random_shared_vertex_pair(g);
    const auto sol = equal_distance_points(p1, p2);
    ASSERT_EQ(sol.point_count(), 2);
    const double scale = pair_scale(p1, p2);
    for (Point m : {*sol.m1, *sol.m2}) {
      EXPECT_NEAR(distance(m, p2.centroid()), p1.circumradius(), 1e-9 * scale);
      EXPECT_NEAR(distance(m, p1.centroid()), p2.circumradius(), 1e-9 * scale);
      EXPECT_TRUE(system_star_at(p1, p2, m).pass);
      EXPECT_TRUE(multisets_equal(distances_squared(vertices(p1), m), distances_squared(vertices(p2), m)).equal);
    }
    const auto c1 = correspondence(p1, p2, *sol.m1);
    const auto c2 = correspondence(p1, p2, *sol.m2);
    EXPECT_EQ(c1.kind, MatchKind::Identity);
    EXPECT_EQ(c2.kind, MatchKind::Reversal);
    EXPECT_TRUE(c1.cosine_model_pass);
    EXPECT_TRUE(c2.cosine_model_pass);
    const auto props = verify_point_properties(p1, p2, sol);
    for (const auto& c : props.checks) EXPECT_TRUE(c.pass) << c.name << " residual " << c.residual;
  }
}

TEST(EqualizerProperty, AlignedPairsShareDistanceMultisets) {
  Gen g(32);
  for (int i = 0; i < 300; ++i) {
    const int n = g.integer(3, 10);
    const auto p1 = make_polygon(n, g.point(4), g.uniform(0.5, 4), g.angle(), g.orientation());
    const double l = g.uniform(0.1, 5);
    const Point m = p1.centroid() + from_polar(l, g.angle());
    const double d1 = distance(m, p1.vertex(1));
    // Second polygon: its centroid chosen so that M lies on Circle(O2, R1), radius |M O1|.
    const Point o2 = m + from_polar(p1.circumradius(), g.angle());
    auto p2 = make_polygon(n, o2, l, g.angle(), opposite(p1.orientation()));
    if (std::abs(p2.circumradius() - p1.circumradius()) < 0.05 * p1.circumradius()) continue;
    const double lo = std::abs(distance(m, o2) - p2.circumradius());
    const double hi = distance(m, o2) + p2.circumradius();
    if (d1 <= lo + 1e-6 || d1 >= hi - 1e-6) continue;
    for (const auto& aligned : align_rotation(p2, m, d1)) {
      const auto cmp =
          multisets_equal(distances_squared(vertices(p1), m), distances_squared(vertices(aligned), m));
      EXPECT_TRUE(cmp.equal) << cmp.max_residual;
    }
  }
}

TEST(EqualizerProperty, NonSolutionPointsFailSystem) {
  Gen g(33);
  int failures = 0;
  for (int i = 0; i < 300; ++i) {
    const auto [p1, p2] = random_shared_vertex_pair(g);
    const Point m = p1.centroid() + g.point(5);
    const auto sol = equal_distance_points(p1, p2);
    const double scale = pair_scale(p1, p2);
    if (distance(m, *sol.m1) < 1e-3 * scale || distance(m, *sol.m2) < 1e-3 * scale) continue;
    if (!system_star_at(p1, p2, m).pass) ++failures;
    else ADD_FAILURE() << "system holds away from the solutions at " << to_string(m);
  }
  EXPECT_GT(failures, 250);
}

TEST(EqualizerProperty, CongruentMirrorPointsOnBisector) {
  Gen g(34);
  for (int i = 0; i < 200; ++i) {
    const int n = g.integer(3, 12);
    const Point o1 = g.point(4);
    const Point o2 = g.point(4);
    if (distance(o1, o2) < 0.1) continue;
    const auto p1 = make_polygon(n, o1, g.uniform(0.3, 4), g.angle(), g.orientation());
    const Point mid = midpoint(o1, o2);
    const Point axis = perp(o2 - o1);
    const auto p2 = reflect_polygon(p1, mid, mid + axis);
    EXPECT_EQ(classify_pair(p1, p2), CaseKind::CongruentDistinctCentroids);
    const Point m = mid + g.uniform(-5, 5) * axis;
    EXPECT_TRUE(system_star_at(p1, p2, m).pass);
    const Point off = m + 0.3 * (o2 - o1);
    EXPECT_FALSE(system_star_at(p1, p2, off).pass);
  }
}

}  // namespace
}  // namespace polyeq
