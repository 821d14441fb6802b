#include <gtest/gtest.h>

#include "holocolor/circle_layers.hpp"
#include "holocolor/error.hpp"
#include "holocolor/gamma.hpp"
#include "holocolor/oracles.hpp"

using namespace holocolor;

namespace {

CircleLayers single(int m) {
  std::vector<Rational> pts;
  for (int i = 0; i < m; ++i) pts.emplace_back(i);
  return CircleLayers(Rational(m), {pts});
}

CircleLayers interleaved() { return CircleLayers(4, {{0, 2}, {1, 3}}); }
CircleLayers nested() { return CircleLayers(4, {{0, 2}, {Rational(1, 2), Rational(3, 2)}}); }

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("a"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(CircleLayers, ValidatesInput) {
  EXPECT_THROW(CircleLayers(0, {{0, 1}}), DomainError);
  EXPECT_THROW(CircleLayers(4, {{0}}), DomainError);
  EXPECT_THROW(CircleLayers(4, {{0, 4}}), DomainError);
  EXPECT_THROW(CircleLayers(4, {{0, -1}}), DomainError);
  EXPECT_THROW(CircleLayers(4, {{0, 2}, {2, 3}}), DomainError);
  EXPECT_THROW(CircleLayers(4, {{1, 1, 2}}), DomainError);
  EXPECT_THROW(CircleLayers(4, {}), DomainError);
}

TEST(CircleLayers, ArcsWrap) {
  auto cl = interleaved();
  auto arcs = cl.arcs();
  ASSERT_EQ(arcs.size(), 4u);
  EXPECT_EQ(cl.arc_count(), 4u);
  EXPECT_EQ(arcs[0].layer, 1);
  EXPECT_EQ(arcs[0].start, 0);
  EXPECT_EQ(arcs[0].end, 2);
  EXPECT_EQ(arcs[1].start, 2);
  EXPECT_EQ(arcs[1].end, 4);
  EXPECT_EQ(arcs[3].layer, 2);
  EXPECT_EQ(arcs[3].start, 3);
  EXPECT_EQ(arcs[3].end, 5);
  for (std::size_t i = 0; i < arcs.size(); ++i) EXPECT_EQ(arcs[i].id, i);
  EXPECT_TRUE(arcs_meet(arcs[0], arcs[3], cl.circumference()));
  EXPECT_TRUE(arcs_meet(arcs[0], arcs[1], cl.circumference()));
  EXPECT_FALSE(arcs_meet(nested().arcs()[1], nested().arcs()[2], 4));
}

TEST(CircleFormat, RoundTrip) {
  const std::string text = "circle 2\nC=4\nlayer: 0 2\nlayer: 1/2 3/2\n";
  auto cl = parse_circle_layers(text);
  EXPECT_EQ(cl, nested());
  EXPECT_EQ(serialize_circle_layers(cl), text);
  auto reordered = parse_circle_layers("# note\ncircle 2\nC=8/2\nlayer: 2 0\n\nlayer: 3/2 1/2\n");
  EXPECT_EQ(reordered, nested());
  EXPECT_EQ(parse_circle_layers(serialize_circle_layers(interleaved())), interleaved());
}

TEST(CircleFormat, Errors) {
  EXPECT_THROW(parse_circle_layers(""), ParseError);
  EXPECT_THROW(parse_circle_layers("circle x\nC=1\nlayer: 0 1/2\n"), ParseError);
  EXPECT_THROW(parse_circle_layers("circle 1\nD=1\nlayer: 0 1/2\n"), ParseError);
  EXPECT_THROW(parse_circle_layers("circle 2\nC=1\nlayer: 0 1/2\n"), ParseError);
  EXPECT_THROW(parse_circle_layers("circle 1\nC=1\nlayers: 0 1/2\n"), ParseError);
  EXPECT_THROW(parse_circle_layers("circle 1\nC=1\nlayer: 0 2\n"), ParseError);
  try {
    parse_circle_layers("circle 1\nC=1\nlayer: 0 q\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Sweep, EventsOrder) {
  auto events = sweep_events(interleaved());
  ASSERT_EQ(events.size(), 4u);
  EXPECT_EQ(events.front().position, 1);
  EXPECT_EQ(events.back().position, 0);
  auto down = sweep_events(interleaved(), SweepDirection::kDecreasing);
  EXPECT_EQ(down.front().position, 0);
  EXPECT_EQ(down[1].position, 3);
}

TEST(Sweep, CrossingSwapsWithFreeColor) {
  auto s = initial_layer_state(2);
  EXPECT_EQ(s.layer_color, (std::vector<Color>{1, 2}));
  EXPECT_EQ(s.free_color, 3);
  s.cross(1);
  EXPECT_EQ(s.layer_color, (std::vector<Color>{3, 2}));
  EXPECT_EQ(s.free_color, 1);
  s.cross(1);
  EXPECT_EQ(s, initial_layer_state(2));
}

TEST(Sweep, ParityLawForSingleLayer) {
  for (int m = 3; m <= 12; ++m) {
    auto cl = single(m);
    EXPECT_EQ(circle_holonomy(cl), Permutation::transposition(2, 1, 2).power(m));
    auto f = circle_colorable(cl);
    EXPECT_EQ(f.has_value(), m % 2 == 0);
    if (f) {
      EXPECT_TRUE(verify_arc_coloring(cl, *f, 2));
    }
    EXPECT_EQ(exhaustive_arc_coloring(cl, 2).has_value(), m % 2 == 0);
  }
}

TEST(Sweep, InterleavedAndNested) {
  auto hol = circle_holonomy(interleaved());
  EXPECT_EQ(hol.cycle_type(), (std::vector<int>{3}));
  EXPECT_FALSE(circle_colorable(interleaved()));
  EXPECT_FALSE(exhaustive_arc_coloring(interleaved(), 3));

  EXPECT_TRUE(circle_holonomy(nested()).is_identity());
  auto f = circle_colorable(nested());
  ASSERT_TRUE(f);
  EXPECT_TRUE(verify_arc_coloring(nested(), *f, 3));
  EXPECT_TRUE(exhaustive_arc_coloring(nested(), 3));
}

TEST(Sweep, ReverseAndDoubleCover) {
  for (const auto& cl : {interleaved(), nested(), single(5), CircleLayers(3, {{0, 1, 2}, {Rational(1, 2), Rational(5, 2)}})}) {
    auto hol = circle_holonomy(cl);
    EXPECT_EQ(circle_holonomy(cl, SweepDirection::kDecreasing), hol.inverse());
    auto cover = cl.double_cover();
    EXPECT_EQ(cover.circumference(), cl.circumference() * 2);
    EXPECT_EQ(cover.arc_count(), 2 * cl.arc_count());
    EXPECT_EQ(circle_holonomy(cover), hol.power(2));
  }
}

TEST(Sweep, VerifyArcColoring) {
  auto cl = nested();
  EXPECT_THROW(verify_arc_coloring(cl, {1, 2}, 3), DomainError);
  EXPECT_FALSE(verify_arc_coloring(cl, {1, 1, 2, 3}, 3));
  EXPECT_FALSE(verify_arc_coloring(cl, {1, 2, 3, 4}, 3));
}

TEST(Sweep, AgreesWithExhaustiveSearch) {
  SeededRng rng(7);
  int colorable = 0;
  for (int i = 0; i < 60; ++i) {
    auto cl = random_circle_layers(rng, kExhaustiveArcBudget);
    ASSERT_LE(cl.arc_count(), kExhaustiveArcBudget);
    auto f = circle_colorable(cl);
    EXPECT_EQ(f.has_value(), exhaustive_arc_coloring(cl, cl.layer_count() + 1).has_value());
    EXPECT_EQ(f.has_value(), circle_holonomy(cl).is_identity());
    colorable += f.has_value();
  }
  EXPECT_GT(colorable, 0);
  EXPECT_LT(colorable, 60);
}

TEST(Intersections, SingleLayerCircle) {
  auto d = circle_intersections(single(4));
  EXPECT_EQ(d.n, 1);
  EXPECT_EQ(d.j, 1);
  EXPECT_TRUE(d.check().empty());
  EXPECT_EQ(d.intersections.size(), 8u);
  EXPECT_EQ(d.intersections.at({0, 1}), 0);
  EXPECT_EQ(d.intersections.at({0, 3}), 0);
  EXPECT_FALSE(d.intersections.count({0, 2}));
}

TEST(Intersections, InterleavedCensus) {
  auto d = circle_intersections(interleaved());
  auto g = gamma_complex(d);
  EXPECT_EQ(g.census(), (std::vector<std::size_t>{4, 6, 4}));
  EXPECT_EQ(g.vertices().size(), 4u);
  EXPECT_EQ(g.regions().size(), 4u);
  for (auto v : g.vertices()) EXPECT_EQ(g.cofacets_of(v).size(), 3u);
  for (auto r : g.regions()) EXPECT_TRUE(g.cofacets_of(r).empty());
  for (const auto& c : g.cells) EXPECT_EQ(c.dimension, 3 - static_cast<int>(c.regions.size()));
  EXPECT_EQ(d.intersections.at({0, 2}), 1);
  EXPECT_EQ(d.intersections.at({0, 1}), 0);
  EXPECT_EQ(d.intersections.at({0, 1, 3}), 0);
}

TEST(Intersections, JsonRoundTrip) {
  auto d = circle_intersections(interleaved());
  auto text = serialize_intersection_json(d);
  auto back = parse_intersection_json(text);
  EXPECT_EQ(back, d);
  EXPECT_EQ(serialize_intersection_json(back), text);
}

TEST(Intersections, JsonErrors) {
  EXPECT_THROW(parse_intersection_json("{"), ParseError);
  EXPECT_THROW(parse_intersection_json(R"({"n":1})"), ParseError);
  EXPECT_THROW(parse_intersection_json(R"({"n":1,"j":1,"regions":[{"id":0,"layer":1}],"intersections":[]})"),
               DomainError);
  EXPECT_THROW(parse_intersection_json(
                   R"({"n":1,"j":1,"regions":[{"id":0,"layer":1},{"id":1,"layer":1}],
                       "intersections":[{"regions":[0],"dim":1},{"regions":[1],"dim":1},{"regions":[0,1],"dim":1}]})"),
               DomainError);
  EXPECT_THROW(parse_intersection_json(
                   R"({"n":1,"j":1,"regions":[{"id":0,"layer":1}],
                       "intersections":[{"regions":[0],"dim":1},{"regions":[0],"dim":1}]})"),
               ParseError);
}

TEST(Gamma, TagLawViolation) {
  auto d = circle_intersections(interleaved());
  d.intersections[{0, 2}] = 0;
  ASSERT_TRUE(d.check().empty());
  EXPECT_THROW(gamma_complex(d), DomainError);
}

TEST(Gamma, FaceRelationIsReverseInclusion) {
  auto g = gamma_complex(circle_intersections(nested()));
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    for (auto f : g.facets_of(c)) {
      EXPECT_EQ(g.cells[f].regions.size(), g.cells[c].regions.size() + 1);
      EXPECT_TRUE(std::includes(g.cells[f].regions.begin(), g.cells[f].regions.end(), g.cells[c].regions.begin(),
                                g.cells[c].regions.end()));
      EXPECT_EQ(g.cells[f].dimension + 1, g.cells[c].dimension);
    }
  }
}

TEST(Gamma, TransferMatchesDirectProperness) {
  auto cl = nested();
  auto d = circle_intersections(cl);
  auto g = gamma_complex(d);
  auto f = *circle_colorable(cl);
  std::map<RegionId, Color> good;
  for (std::size_t i = 0; i < f.size(); ++i) good[i] = f[i];
  auto r = gamma_coloring_transfer(d, g, good);
  EXPECT_TRUE(r.proper_on_data);
  EXPECT_TRUE(r.proper_on_gamma);
  auto bad = good;
  bad[2] = bad[0];
  auto s = gamma_coloring_transfer(d, g, bad);
  EXPECT_FALSE(s.proper_on_data);
  EXPECT_FALSE(s.proper_on_gamma);
  bad.erase(3);
  EXPECT_THROW(gamma_coloring_transfer(d, g, bad), DomainError);
}
