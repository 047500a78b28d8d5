#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "polyeq/cli/svg.hpp"

namespace polyeq::cli {
namespace {

Scenario load(const std::string& name) {
  std::ifstream in(std::string(POLYEQ_SCENARIO_DIR) + "/" + name, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

int count(const std::string& hay, const std::string& needle) {
  int c = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++c;
  return c;
}

std::string render(const Scenario& s) { return render_svg(s, run_scenario(s)); }

TEST(RenderSvg, SharedVertexSquares) {
  const std::string svg = render(load("shared_vertex_squares.json"));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(svg, "<polygon"), 2);
  EXPECT_EQ(count(svg, "<circle"), 4);
  EXPECT_EQ(count(svg, "class=\"eqpoint\""), 2);
  EXPECT_EQ(count(svg, "class=\"pair-segment\""), 2 * 2 * 3);
  EXPECT_EQ(count(svg, ">M1<"), 1);
  EXPECT_EQ(count(svg, ">M2<"), 1);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(RenderSvg, Bottema) {
  const std::string svg = render(load("bottema_squares.json"));
  EXPECT_EQ(count(svg, "class=\"triangle\""), 1);
  EXPECT_EQ(count(svg, "class=\"ngon\""), 2);
  EXPECT_EQ(count(svg, "class=\"d-segment\""), 1);
  EXPECT_EQ(count(svg, ">M1<"), 1);
  EXPECT_EQ(count(svg, "<circle"), 0);
}

TEST(RenderSvg, TangentLabelsSinglePoint) {
  const std::string svg = render(load("shared_vertex_collinear.json"));
  EXPECT_EQ(count(svg, "class=\"eqpoint\""), 1);
  EXPECT_EQ(count(svg, ">M1=M2<"), 1);
}

TEST(RenderSvg, DisjointHasNoEqualDistancePoints) {
  const std::string svg = render(load("pair_disjoint.json"));
  EXPECT_EQ(count(svg, "class=\"eqpoint\""), 0);
  EXPECT_EQ(count(svg, "class=\"locus-circle\""), 2);
}

TEST(RenderSvg, IdentityProbes) {
  const std::string svg = render(load("identity_heptagon.json"));
  EXPECT_EQ(count(svg, "class=\"probe\""), 4);
  EXPECT_EQ(count(svg, "class=\"ngon\""), 1);
}

TEST(RenderSvg, ByteStable) {
  for (const char* name : {"shared_vertex_squares.json", "bottema_squares.json", "pair_congruent_mirror.json",
                           "pair_generic.json"}) {
    const Scenario s = load(name);
    EXPECT_EQ(render(s), render(s)) << name;
  }
}

TEST(SvgNum, NoNegativeZero) {
  EXPECT_EQ(svg::num(-0.0), "0.000000");
  EXPECT_EQ(svg::num(-1e-9), "0.000000");
  EXPECT_EQ(svg::num(1.5), "1.500000");
}

}  // namespace
}  // namespace polyeq::cli
