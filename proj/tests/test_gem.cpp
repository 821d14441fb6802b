#include <gtest/gtest.h>

#include "holocolor/builders.hpp"
#include "holocolor/error.hpp"
#include "holocolor/gem.hpp"
#include "holocolor/oracles.hpp"
#include "holocolor/planarity.hpp"

using namespace holocolor;

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

EdgeList complete(std::size_t n) {
  EdgeList e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return e;
}

EdgeList k33() {
  EdgeList e;
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 3; v < 6; ++v) e.emplace_back(u, v);
  return e;
}

EdgeList petersen() {
  EdgeList e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return e;
}

EdgeList cube() {
  EdgeList e;
  for (std::size_t v = 0; v < 8; ++v)
    for (std::size_t bit : {1u, 2u, 4u})
      if (!(v & bit)) e.emplace_back(v, v | bit);
  return e;
}

// K3,3 with every edge subdivided once where room allows (12 vertices).
EdgeList subdivided_k33() {
  EdgeList e;
  std::size_t next = 6;
  for (auto [u, v] : k33()) {
    if (next < 12) {
      e.emplace_back(u, next);
      e.emplace_back(next, v);
      ++next;
    } else {
      e.emplace_back(u, v);
    }
  }
  return e;
}

Gem cross_polytope_gem() {
  auto t = cross_polytope_boundary(3);
  Coloring f;
  for (auto v : t.vertices()) f[v] = static_cast<Color>((v - 1) % 4) + 1;
  return gem_from_coloring(t, f);
}

}  // namespace

TEST(Planarity, ClassicGraphs) {
  struct Case {
    const char* name;
    std::size_t n;
    EdgeList edges;
    bool planar;
  };
  auto k5_minus = complete(5);
  k5_minus.pop_back();
  auto k33_minus = k33();
  k33_minus.pop_back();
  std::vector<Case> cases = {
      {"K4", 4, complete(4), true},          {"K5", 5, complete(5), false},
      {"K5-e", 5, k5_minus, true},           {"K33", 6, k33(), false},
      {"K33-e", 6, k33_minus, true},         {"Petersen", 10, petersen(), false},
      {"cube", 8, cube(), true},             {"subdivided K33", 12, subdivided_k33(), false},
      {"empty", 7, {}, true},                {"K6", 6, complete(6), false},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(is_planar(c.n, c.edges), c.planar) << c.name;
    EXPECT_EQ(kuratowski_planar(c.n, c.edges), c.planar) << c.name;
  }
}

TEST(Planarity, LoopsAndParallelEdgesIgnored) {
  EdgeList e = {{0, 1}, {0, 1}, {1, 1}, {1, 2}, {2, 0}};
  EXPECT_TRUE(is_planar(3, e));
  EXPECT_TRUE(kuratowski_planar(3, e));
  auto k5 = complete(5);
  k5.push_back({0, 1});
  EXPECT_FALSE(is_planar(5, k5));
  EXPECT_THROW(kuratowski_planar(13, {}), BudgetExceeded);
}

TEST(Planarity, RandomGraphsAgreeWithKuratowskiSearch) {
  SeededRng rng(11);
  int planar = 0, total = 0;
  for (int i = 0; i < 150; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(5, 10));
    EdgeList e;
    const auto density = rng.between(15, 60);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng.between(1, 100) <= density) e.emplace_back(u, v);
    const bool expected = kuratowski_planar(n, e);
    EXPECT_EQ(is_planar(n, e), expected);
    planar += expected;
    ++total;
  }
  EXPECT_GT(planar, 10);
  EXPECT_LT(planar, total - 10);
}

TEST(Gem, ValidatesStructure) {
  EXPECT_THROW(Gem({{0, 0, 1}}), DomainError);
  EXPECT_THROW(Gem({{0, 1, 1}, {0, 1, 2}, {0, 1, 3}}), DomainError);
  EXPECT_THROW(Gem({{0, 1, 1}, {0, 1, 1}, {0, 1, 3}, {0, 1, 4}}), DomainError);
  EXPECT_THROW(Gem({{0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 5}}), DomainError);
  std::vector<GemEdge> two;
  for (int c = 1; c <= 4; ++c) {
    two.push_back({0, 1, c});
    two.push_back({2, 3, c});
  }
  EXPECT_THROW(Gem{two}, DomainError);
}

TEST(Gem, TwoVertexCensus) {
  auto r = gem_report(two_vertex_gem());
  EXPECT_EQ(r.vertex_count, 2u);
  EXPECT_EQ(r.edge_count, 4u);
  EXPECT_EQ(r.cycle_count, 6u);
  EXPECT_EQ(r.region_count, 4u);
  EXPECT_EQ(r.euler, 0);
  EXPECT_TRUE(r.all_even);
  EXPECT_TRUE(r.all_planar);
  for (const auto& [pair, lengths] : r.bicolored_cycles) EXPECT_EQ(lengths, std::vector<std::size_t>{2});
}

TEST(Gem, CrossPolytopeCensus) {
  auto g = cross_polytope_gem();
  auto r = gem_report(g);
  EXPECT_EQ(r.vertex_count, 16u);
  EXPECT_EQ(r.edge_count, 32u);
  EXPECT_EQ(r.cycle_count, 24u);
  EXPECT_EQ(r.region_count, 8u);
  EXPECT_EQ(r.euler, 0);
  EXPECT_TRUE(r.all_planar);
  ASSERT_EQ(r.bicolored_cycles.size(), 6u);
  for (const auto& [pair, lengths] : r.bicolored_cycles)
    for (auto l : lengths) EXPECT_EQ(l, 4u);
  for (const auto& t : r.triples) EXPECT_EQ(t.component_sizes, (std::vector<std::size_t>{8, 8}));
}

TEST(Gem, SubdividedSimplexHasZeroEuler) {
  auto [t, f] = barycentric_subdivide(simplex_boundary(3));
  auto r = gem_report(gem_from_coloring(t, f));
  EXPECT_EQ(r.vertex_count, 120u);
  EXPECT_EQ(r.region_count, 30u);
  EXPECT_EQ(r.euler, 0);
  EXPECT_TRUE(r.all_planar);
}

TEST(Gem, FromColoringRejectsBadInput) {
  auto t = cross_polytope_boundary(3);
  Coloring bad;
  for (auto v : t.vertices()) bad[v] = 1;
  EXPECT_THROW(gem_from_coloring(t, bad), DomainError);
  EXPECT_THROW(gem_from_coloring(torus7(), {}), DomainError);
}

TEST(GemFormat, RoundTripAndErrors) {
  auto g = cross_polytope_gem();
  auto text = serialize_gem(g);
  EXPECT_EQ(parse_gem(text), g);
  EXPECT_EQ(serialize_gem(parse_gem(text)), text);
  EXPECT_EQ(parse_gem("# two\ngem 3\n0 1 1\n1 0 2\n0 1 3\n\n0 1 4\n"), two_vertex_gem());
  EXPECT_THROW(parse_gem("gem 4\n"), ParseError);
  EXPECT_THROW(parse_gem("0 1 1\n"), ParseError);
  EXPECT_THROW(parse_gem("gem 3\n0 1\n"), ParseError);
  EXPECT_THROW(parse_gem("gem 3\n0 1 9\n"), ParseError);
  EXPECT_THROW(parse_gem("gem 3\n0 0 1\n"), ParseError);
  EXPECT_THROW(parse_gem("gem 3\n0 1 1\n"), DomainError);
  try {
    parse_gem("gem 3\n0 1 1\n0 x 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(GemFormat, DotExport) {
  auto g = two_vertex_gem();
  auto dot = export_dot(g);
  EXPECT_NE(dot.find("graph gem {"), std::string::npos);
  for (const char* color : {"red", "green", "blue", "black"}) EXPECT_NE(dot.find(color), std::string::npos);
  EXPECT_EQ(parse_gem_from_dot(dot), g);
  EXPECT_EQ(parse_gem_from_dot(export_dot(cross_polytope_gem())), cross_polytope_gem());
  EXPECT_THROW(parse_gem_from_dot("graph g {}"), ParseError);
}

TEST(Gem, RandomGemsAreRegularAndEven) {
  SeededRng rng(3);
  for (int i = 0; i < 30; ++i) {
    auto g = random_gem(rng, 2 * static_cast<std::size_t>(rng.between(1, 8)));
    auto r = gem_report(g);
    EXPECT_EQ(r.edge_count, 2 * r.vertex_count);
    EXPECT_TRUE(r.all_even);
    std::size_t per_pair = 0;
    for (const auto& [pair, lengths] : r.bicolored_cycles) {
      std::size_t covered = 0;
      for (auto l : lengths) covered += l;
      EXPECT_EQ(covered, r.vertex_count);
      per_pair += lengths.size();
    }
    EXPECT_EQ(per_pair, r.cycle_count);
  }
  EXPECT_THROW(random_gem(rng, 3), DomainError);
}
