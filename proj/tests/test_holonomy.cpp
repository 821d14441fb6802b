#include <gtest/gtest.h>

#include "holocolor/builders.hpp"
#include "holocolor/coloring.hpp"
#include "holocolor/defects.hpp"
#include "holocolor/error.hpp"
#include "holocolor/holonomy.hpp"
#include "holocolor/permutation.hpp"

using namespace holocolor;

namespace {

Permutation cycles(int degree, const char* text) { return Permutation::from_cycles(degree, text); }

std::vector<std::size_t> walk_of(const Triangulation& t, std::initializer_list<Simplex> simplices) {
  std::vector<std::size_t> walk;
  for (const auto& s : simplices) walk.push_back(*t.find(s));
  return walk;
}

}  // namespace

TEST(Permutation, BasicsAndNotation) {
  auto p = cycles(4, "(1 2)(3 4)");
  EXPECT_EQ(p.images(), (std::vector<int>{2, 1, 4, 3}));
  EXPECT_EQ(p.to_cycle_string(), "(1 2)(3 4)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_EQ(cycles(3, "()"), Permutation::identity(3));
  EXPECT_EQ(cycles(5, "(3 1 4)").to_cycle_string(), "(1 4 3)");
  EXPECT_EQ(cycles(5, "(3 1 4)").cycle_type(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(Permutation::transposition(3, 1, 3).cycle_type(), (std::vector<int>{2, 1}));
  EXPECT_THROW(Permutation({1, 1, 2}), DomainError);
  EXPECT_THROW(Permutation({0, 1}), DomainError);
  EXPECT_THROW(cycles(3, "(1 4)"), ParseError);
  EXPECT_THROW(cycles(3, "(1 2)(2 3)"), ParseError);
  EXPECT_THROW(cycles(3, "(1 2"), ParseError);
}

TEST(Permutation, CompositionAppliesRightFirst) {
  auto a = cycles(3, "(1 2)");
  auto b = cycles(3, "(2 3)");
  auto ab = compose(a, b);
  for (int x = 1; x <= 3; ++x) EXPECT_EQ(ab(x), a(b(x)));
  EXPECT_EQ(ab, cycles(3, "(1 2 3)"));
  EXPECT_EQ(compose(ab, ab.inverse()), Permutation::identity(3));
  EXPECT_EQ(ab.power(3), Permutation::identity(3));
  EXPECT_EQ(ab.power(-1), ab.inverse());
  EXPECT_EQ(ab.power(2), compose(ab, ab));
  EXPECT_THROW(compose(a, Permutation::identity(4)), DomainError);
}

TEST(Permutation, SubgroupClosureOrders) {
  EXPECT_EQ(subgroup_closure(3, {}).order, 1u);
  EXPECT_EQ(subgroup_closure(3, {cycles(3, "(1 2)")}).order, 2u);
  EXPECT_EQ(subgroup_closure(3, {cycles(3, "(1 2)"), cycles(3, "(1 2 3)")}).order, 6u);
  EXPECT_EQ(subgroup_closure(4, {cycles(4, "(1 2 3)"), cycles(4, "(2 3 4)")}).order, 12u);
  EXPECT_EQ(subgroup_closure(5, {cycles(5, "(1 2)"), cycles(5, "(1 2 3 4 5)")}).order, 120u);
  EXPECT_THROW(subgroup_closure(9, {}), BudgetExceeded);
}

TEST(Propagation, HandLoopOnTetrahedronBoundary) {
  auto t = simplex_boundary(2);
  auto dual = dual_graph(t);
  auto start = base_labeling(t, *t.find({1, 2, 3}));
  auto end = propagate_along(t, dual, start, walk_of(t, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 2, 3}}));
  EXPECT_EQ(end.color_of(1), 1);
  EXPECT_EQ(end.color_of(2), 3);
  EXPECT_EQ(end.color_of(3), 2);
  EXPECT_EQ(labeling_permutation(start, end), cycles(3, "(2 3)"));
}

TEST(Propagation, SingleStepKeepsFacetColors) {
  auto t = simplex_boundary(2);
  auto dual = dual_graph(t);
  auto start = base_labeling(t, 0);
  auto e = *dual.edge_between(0, 1);
  auto next = propagate(t, dual, start, e);
  for (auto v : dual.edges[e].facet) EXPECT_EQ(next.color_of(v), start.color_of(v));
  std::set<Color> colors;
  for (auto [v, c] : next.colors) colors.insert(c);
  EXPECT_EQ(colors, (std::set<Color>{1, 2, 3}));
  EXPECT_THROW(propagate(t, dual, next, *dual.edge_between(2, 3)), DomainError);
  EXPECT_THROW(propagate_along(t, dual, start, {1, 0}), DomainError);
}

TEST(Holonomy, GeneratorCountIsCycleRank) {
  for (auto t : {simplex_boundary(2), cross_polytope_boundary(3), torus7(), rp2_6()}) {
    auto dual = dual_graph(t);
    auto hol = holonomy_generators(t);
    EXPECT_EQ(hol.generators.size(), dual.edges.size() - t.size() + 1);
    EXPECT_EQ(hol.labelings.size(), t.size());
    EXPECT_EQ(hol.base, 0u);
  }
}

TEST(Holonomy, Octahedron) {
  auto t = cross_polytope_boundary(2);
  auto hol = holonomy_generators(t);
  EXPECT_TRUE(hol.trivial());
  auto inv = holonomy_invariants(t);
  EXPECT_EQ(inv.image_order, 1u);
  EXPECT_TRUE(inv.trivial);
  auto f = is_colorable(t);
  ASSERT_TRUE(f);
  EXPECT_TRUE(verify_coloring(t, *f, 3));
  for (VertexId v = 1; v <= 3; ++v) EXPECT_EQ(f->at(v), f->at(v + 3));
}

TEST(Holonomy, TetrahedronBoundary) {
  auto inv = holonomy_invariants(simplex_boundary(2));
  EXPECT_FALSE(inv.trivial);
  EXPECT_GE(inv.image_order, 2u);
  bool transposition = false;
  for (const auto& ct : inv.cycle_types) transposition |= ct == std::vector<int>{2, 1};
  EXPECT_TRUE(transposition);
  EXPECT_FALSE(is_colorable(simplex_boundary(2)));
}

TEST(Holonomy, TorusHasEvenNontrivialHolonomy) {
  auto t = torus7();
  auto hol = holonomy_generators(t);
  EXPECT_FALSE(hol.trivial());
  // Bipartite dual graph: every closed walk has even length, so every
  // generator is an even permutation.
  for (const auto& g : hol.generators) {
    auto ct = g.permutation.cycle_type();
    EXPECT_TRUE(ct == (std::vector<int>{1, 1, 1}) || ct == (std::vector<int>{3}));
  }
  EXPECT_FALSE(is_colorable(t));
  EXPECT_TRUE(is_locally_colorable(t).locally_colorable);
}

TEST(Holonomy, CrossPolytopeThreeColorsAntipodally) {
  auto t = cross_polytope_boundary(3);
  auto f = is_colorable(t);
  ASSERT_TRUE(f);
  EXPECT_TRUE(verify_coloring(t, *f, 4));
  for (VertexId v = 1; v <= 4; ++v) EXPECT_EQ(f->at(v), f->at(v + 4));
}

TEST(Holonomy, GeneratorLoopsRealizeGenerators) {
  auto t = rp2_6();
  auto dual = dual_graph(t);
  auto hol = holonomy_generators(t, dual);
  auto base = base_labeling(t, hol.base);
  for (std::size_t g = 0; g < hol.generators.size(); ++g) {
    auto loop = hol.generator_loop(dual, g);
    EXPECT_EQ(loop.front(), hol.base);
    EXPECT_EQ(loop.back(), hol.base);
    EXPECT_EQ(labeling_permutation(base, propagate_along(t, dual, base, loop)), hol.generators[g].permutation);
  }
}

TEST(Holonomy, TreeOrdersAgreeWhenTrivial) {
  for (auto t : {cross_polytope_boundary(2), cross_polytope_boundary(3), barycentric_subdivide(torus7()).first}) {
    auto bfs = holonomy_generators(t, TreeOrder::kBreadthFirst);
    auto dfs = holonomy_generators(t, TreeOrder::kDepthFirst);
    ASSERT_TRUE(bfs.trivial());
    ASSERT_TRUE(dfs.trivial());
    EXPECT_EQ(bfs.labelings, dfs.labelings);
    EXPECT_NE(bfs.parent_edge, dfs.parent_edge);
  }
}

TEST(Holonomy, LinkLoopIsTranspositionPower) {
  for (auto t : {simplex_boundary(2), torus7(), simplex_boundary(3), stellar_subdivide(cross_polytope_boundary(3), {1, 2}, 9)}) {
    auto dual = dual_graph(t);
    for (const auto& [face, degree] : face_census(t).codim2_degree) {
      auto cyc = link_cycle(t, dual, face);
      EXPECT_EQ(cyc.size(), degree);
      auto p = link_loop_permutation(t, dual, face);
      EXPECT_EQ(p.is_identity(), degree % 2 == 0);
      if (degree % 2 == 1) {
        EXPECT_EQ(p.cycle_type()[0], 2);
      }
      EXPECT_EQ(p.power(2), Permutation::identity(t.dimension() + 1));
    }
  }
  EXPECT_THROW(link_cycle(torus7(), dual_graph(torus7()), {0, 1}), DomainError);
  EXPECT_THROW(link_cycle(torus7(), dual_graph(torus7()), {99}), DomainError);
}

TEST(Holonomy, RelabelingKeepsGenerators) {
  auto t = rp2_6();
  auto a = holonomy_generators(t);
  auto b = holonomy_generators(relabel_affine(t, 5, 100));
  ASSERT_EQ(a.generators.size(), b.generators.size());
  for (std::size_t g = 0; g < a.generators.size(); ++g)
    EXPECT_EQ(a.generators[g].permutation, b.generators[g].permutation);
}

TEST(Holonomy, RejectsInvalidComplex) {
  Triangulation open(2, {{1, 2, 3}, {1, 2, 4}});
  EXPECT_THROW(holonomy_generators(open), DomainError);
  EXPECT_THROW(holonomy_invariants(simplex_boundary(8)), BudgetExceeded);
}

TEST(LocalColorability, ExamplesAndOddFaces) {
  auto d3 = is_locally_colorable(simplex_boundary(2));
  EXPECT_FALSE(d3.locally_colorable);
  EXPECT_EQ(d3.odd_faces.size(), 4u);
  EXPECT_TRUE(is_locally_colorable(cross_polytope_boundary(2)).locally_colorable);
  auto d4 = is_locally_colorable(simplex_boundary(3));
  EXPECT_FALSE(d4.locally_colorable);
  EXPECT_EQ(d4.odd_faces.size(), 10u);
  auto c = is_locally_colorable(circle(5));
  EXPECT_TRUE(c.locally_colorable);
  EXPECT_TRUE(c.odd_faces.empty());
}

TEST(Coloring, VerifyAndBruteForce) {
  auto t = simplex_boundary(2);
  EXPECT_THROW(verify_coloring(t, {{1, 1}, {2, 2}}, 3), DomainError);
  EXPECT_FALSE(verify_coloring(t, {{1, 1}, {2, 2}, {3, 3}, {4, 1}}, 3));
  EXPECT_TRUE(verify_coloring(t, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}, 4));
  EXPECT_FALSE(verify_coloring(t, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}, 3));

  auto four = brute_force_colorable(t, 4);
  ASSERT_TRUE(four);
  EXPECT_TRUE(verify_coloring(t, *four, 4));
  EXPECT_FALSE(brute_force_colorable(t, 3));

  auto k7 = torus7();
  auto seven = brute_force_colorable(k7, 7);
  ASSERT_TRUE(seven);
  EXPECT_TRUE(verify_coloring(k7, *seven, 7));
  EXPECT_FALSE(brute_force_colorable(k7, 6));
  EXPECT_EQ(brute_force_colorable(k7, 7), brute_force_colorable(k7, 7));
}

TEST(Coloring, BruteForceBudget) {
  auto big = barycentric_subdivide(cross_polytope_boundary(3)).first;
  ASSERT_GT(big.vertices().size(), kBruteForceVertexBudget);
  EXPECT_THROW(brute_force_colorable(big, 4), BudgetExceeded);
  EXPECT_THROW(brute_force_colorable(torus7(), 0), DomainError);
}

TEST(Coloring, BruteForceAgreesWithHolonomyOnSubdivisions) {
  for (auto t : {barycentric_subdivide(simplex_boundary(2)).first, barycentric_subdivide(rp2_6()).first,
                 stellar_subdivide(cross_polytope_boundary(2), {1, 2}, 7)}) {
    auto bf = brute_force_colorable(t, t.dimension() + 1);
    EXPECT_EQ(bf.has_value(), is_colorable(t).has_value());
  }
}

TEST(Defects, FourSimplexBoundary) {
  auto d = defect_graphs(simplex_boundary(3));
  EXPECT_EQ(d.defect_regions, (std::vector<VertexId>{1, 2, 3, 4, 5}));
  EXPECT_EQ(d.odd_edges.size(), 10u);
  for (auto [v, k] : d.odd_degree()) EXPECT_EQ(k, 4u);
  EXPECT_TRUE(d.odd_degrees_even());
  EXPECT_FALSE(d.empty());
  EXPECT_FALSE(d.adjacency_triangle_free());
  EXPECT_FALSE(defect_free_coloring(simplex_boundary(3)));
}

TEST(Defects, EmptyOnEvenComplexes) {
  auto cp = cross_polytope_boundary(3);
  EXPECT_TRUE(defect_graphs(cp).empty());
  EXPECT_TRUE(defect_graphs(cp).defect_regions.empty());
  auto f = defect_free_coloring(cp);
  ASSERT_TRUE(f);
  EXPECT_TRUE(verify_coloring(cp, *f, 4));

  auto sd = barycentric_subdivide(simplex_boundary(3)).first;
  EXPECT_TRUE(defect_graphs(sd).empty());
  auto g = defect_free_coloring(sd);
  ASSERT_TRUE(g);
  EXPECT_TRUE(verify_coloring(sd, *g, 4));
}

TEST(Defects, OddDegreesEvenAfterStellarMoves) {
  auto t = cross_polytope_boundary(3);
  t = stellar_subdivide(t, {1, 2}, 20);
  t = stellar_subdivide(t, t.simplex(3), 21);
  auto d = defect_graphs(t);
  EXPECT_FALSE(d.empty());
  EXPECT_TRUE(d.odd_degrees_even());
  std::size_t total = 0;
  for (auto [v, k] : d.odd_degree()) total += k;
  EXPECT_EQ(total % 2, 0u);
  for (auto e : d.odd_edges) EXPECT_TRUE(std::binary_search(d.adjacency_edges.begin(), d.adjacency_edges.end(), e));
  EXPECT_THROW(defect_graphs(torus7()), DomainError);
  EXPECT_THROW(defect_free_coloring(torus7()), DomainError);
}
