#include "holocolor/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "holocolor/builders.hpp"
#include "holocolor/coloring.hpp"
#include "holocolor/defects.hpp"
#include "holocolor/error.hpp"
#include "holocolor/gamma.hpp"
#include "holocolor/holonomy.hpp"
#include "holocolor/homology.hpp"
#include "holocolor/planarity.hpp"

namespace holocolor {

namespace {

using Mask = std::uint32_t;

struct BitGraph {
  std::size_t n = 0;
  std::vector<Mask> adj;
  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(__builtin_popcount(adj[v])); }
};

// Searches for internally disjoint paths joining every pair, interiors drawn
// from vertices outside `branch`. Failed (pair index, used set) states are
// remembered.
class PathPacking {
 public:
  PathPacking(const BitGraph& g, Mask branch, std::vector<std::pair<std::size_t, std::size_t>> pairs)
      : g_(g), branch_(branch), pairs_(std::move(pairs)) {}

  bool solve() { return pack(0, 0); }

 private:
  bool pack(std::size_t k, Mask used) {
    if (k == pairs_.size()) return true;
    if (failed_.count({k, used})) return false;
    auto [s, t] = pairs_[k];
    std::function<bool(std::size_t, Mask)> walk = [&](std::size_t at, Mask interior) {
      if ((g_.adj[at] >> t) & 1U)
        if (pack(k + 1, used | interior)) return true;
      Mask next = g_.adj[at] & ~branch_ & ~used & ~interior;
      for (std::size_t v = 0; v < g_.n; ++v)
        if ((next >> v) & 1U)
          if (walk(v, interior | (Mask{1} << v))) return true;
      return false;
    };
    if (walk(s, 0)) return true;
    failed_.insert({k, used});
    return false;
  }

  const BitGraph& g_;
  Mask branch_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::set<std::pair<std::size_t, Mask>> failed_;
};

// Calls visit(mask) for every k-subset of the candidate list.
bool any_subset(const std::vector<std::size_t>& candidates, std::size_t k,
                const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (chosen.size() == k) return visit(chosen);
    for (std::size_t i = from; i + (k - chosen.size()) <= candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

bool has_k5_subdivision(const BitGraph& g) {
  std::vector<std::size_t> candidates;
  for (std::size_t v = 0; v < g.n; ++v)
    if (g.degree(v) >= 4) candidates.push_back(v);
  return any_subset(candidates, 5, [&](const std::vector<std::size_t>& b) {
    Mask branch = 0;
    for (auto v : b) branch |= Mask{1} << v;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) pairs.emplace_back(b[i], b[j]);
    return PathPacking(g, branch, pairs).solve();
  });
}

bool has_k33_subdivision(const BitGraph& g) {
  std::vector<std::size_t> candidates;
  for (std::size_t v = 0; v < g.n; ++v)
    if (g.degree(v) >= 3) candidates.push_back(v);
  return any_subset(candidates, 6, [&](const std::vector<std::size_t>& b) {
    Mask branch = 0;
    for (auto v : b) branch |= Mask{1} << v;
    // b[0] is on the first side; pick its two partners from the other five.
    for (std::size_t x = 1; x < 6; ++x)
      for (std::size_t y = x + 1; y < 6; ++y) {
        std::vector<std::size_t> left{b[0], b[x], b[y]}, right;
        for (std::size_t i = 1; i < 6; ++i)
          if (i != x && i != y) right.push_back(b[i]);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (auto l : left)
          for (auto r : right) pairs.emplace_back(l, r);
        if (PathPacking(g, branch, pairs).solve()) return true;
      }
    return false;
  });
}

std::string describe(const Triangulation& t) {
  std::string s = serialize_triangulation(t);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

// Collects results for one named property, keeping the first counterexample.
class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& dump) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = dump();
    }
  }

  PropertyResult take() && { return std::move(result_); }

 private:
  PropertyResult result_;
};

bool meet(const Arc& a, const Arc& b, const Rational& c) {
  for (int shift = -1; shift <= 1; ++shift) {
    const Rational offset = shift * c;
    const Rational lo = std::max<Rational>(a.start, b.start + offset);
    const Rational hi = std::min<Rational>(a.end, b.end + offset);
    if (lo <= hi) return true;
  }
  return false;
}

std::vector<std::vector<bool>> arc_conflicts(const CircleLayers& cl) {
  auto arcs = cl.arcs();
  std::vector<std::vector<bool>> conflict(arcs.size(), std::vector<bool>(arcs.size(), false));
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t k = i + 1; k < arcs.size(); ++k)
      conflict[i][k] = conflict[k][i] = meet(arcs[i], arcs[k], cl.circumference());
  return conflict;
}

std::string describe(const CircleLayers& cl) {
  std::string s = serialize_circle_layers(cl);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

std::string describe(const Gem& g) {
  std::string s = serialize_gem(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

template <typename T>
void shuffle(SeededRng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

bool kuratowski_planar(std::size_t vertex_count,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (vertex_count > kKuratowskiVertexBudget)
    throw BudgetExceeded("Kuratowski search needs at most " + std::to_string(kKuratowskiVertexBudget) +
                         " vertices");
  BitGraph g;
  g.n = vertex_count;
  g.adj.assign(vertex_count, 0);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw DomainError("edge endpoint out of range");
    if (u == v) continue;
    g.adj[u] |= Mask{1} << v;
    g.adj[v] |= Mask{1} << u;
  }
  std::size_t simple_edges = 0;
  for (std::size_t v = 0; v < g.n; ++v) simple_edges += g.degree(v);
  simple_edges /= 2;
  if (vertex_count >= 3 && simple_edges > 3 * vertex_count - 6) return false;
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

std::optional<ArcColoring> exhaustive_arc_coloring(const CircleLayers& cl, int colors) {
  const std::size_t count = cl.arc_count();
  if (count > kExhaustiveArcBudget)
    throw BudgetExceeded("exhaustive arc search needs at most " + std::to_string(kExhaustiveArcBudget) +
                         " arcs");
  auto conflict = arc_conflicts(cl);
  ArcColoring f(count, 0);
  // Lexicographic order; a prefix with a conflict cannot extend to a proper
  // assignment, so the first complete hit is the least proper one.
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == count) return true;
    for (Color c = 1; c <= colors; ++c) {
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = !(conflict[i][k] && f[k] == c);
      if (!ok) continue;
      f[i] = c;
      if (assign(i + 1)) return true;
    }
    return false;
  };
  if (assign(0)) return f;
  return std::nullopt;
}

std::vector<NamedComplex> builder_suite() {
  std::vector<NamedComplex> out;
  for (int n = 1; n <= 4; ++n)
    out.push_back({"simplex_boundary:" + std::to_string(n), simplex_boundary(n), n >= 2});
  for (int n = 1; n <= 3; ++n)
    out.push_back({"cross_polytope_boundary:" + std::to_string(n), cross_polytope_boundary(n), n >= 2});
  for (int m : {4, 5, 6}) out.push_back({"circle:" + std::to_string(m), circle(m), false});
  out.push_back({"torus7", torus7(), false});
  out.push_back({"rp2_6", rp2_6(), false});
  const std::size_t base_count = out.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    const auto& [name, t, sc] = out[i];
    if (t.dimension() < 2) continue;
    if (name == "cross_polytope_boundary:3" || name == "simplex_boundary:4" || name == "torus7" ||
        name == "rp2_6" || name == "simplex_boundary:2" || name == "simplex_boundary:3" ||
        name == "cross_polytope_boundary:2") {
      NamedComplex sub{"barycentric(" + name + ")", barycentric_subdivide(t).first, sc};
      out.push_back(std::move(sub));
    }
  }
  return out;
}

NamedComplex random_refinement(SeededRng& rng, int index) {
  static const char* const kBases[] = {"simplex_boundary:2", "cross_polytope_boundary:2", "torus7",
                                       "simplex_boundary:3", "cross_polytope_boundary:3"};
  const std::string base = kBases[rng.below(5)];
  Triangulation t = example_by_name(base);
  const auto moves = rng.below(4);
  for (std::uint64_t m = 0; m < moves; ++m) {
    const auto& s = t.simplex(rng.below(t.size()));
    Simplex face = s;
    if (rng.coin()) {
      auto a = rng.below(s.size());
      auto b = rng.below(s.size() - 1);
      if (b >= a) ++b;
      face = {s[std::min(a, b)], s[std::max(a, b)]};
    }
    t = stellar_subdivide(t, face, t.vertices().back() + 1);
  }
  const bool bary = rng.coin();
  if (bary) t = barycentric_subdivide(t).first;
  std::string name = "refinement-" + std::to_string(index) + "(" + base + ", " + std::to_string(moves) +
                     " stellar" + (bary ? ", barycentric)" : ")");
  return {std::move(name), std::move(t), base != "torus7"};
}

std::vector<NamedComplex> suite_complexes(std::uint64_t seed, int refinements) {
  auto out = builder_suite();
  SeededRng rng(seed);
  for (int i = 0; i < refinements; ++i) out.push_back(random_refinement(rng, i));
  return out;
}

CircleLayers random_circle_layers(SeededRng& rng, std::size_t max_arcs) {
  if (max_arcs < 2) throw DomainError("need room for at least two arcs");
  const auto j = static_cast<std::size_t>(rng.between(1, std::min<std::int64_t>(3, static_cast<std::int64_t>(max_arcs / 2))));
  std::vector<std::size_t> counts(j);
  std::size_t budget = max_arcs;
  for (std::size_t i = 0; i < j; ++i) {
    const std::size_t reserve = 2 * (j - i - 1);
    const auto hi = std::min<std::size_t>(4, budget - reserve);
    counts[i] = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(hi)));
    budget -= counts[i];
  }
  const std::int64_t circumference = rng.between(1, 3);
  const std::int64_t denominator = 12;
  std::vector<std::int64_t> slots(static_cast<std::size_t>(circumference * denominator));
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<std::int64_t>(i);
  shuffle(rng, slots);
  std::vector<std::vector<Rational>> layers(j);
  std::size_t next = 0;
  for (std::size_t i = 0; i < j; ++i)
    for (std::size_t k = 0; k < counts[i]; ++k) layers[i].push_back(Rational(slots[next++], denominator));
  return CircleLayers(Rational(circumference), std::move(layers));
}

Gem random_gem(SeededRng& rng, std::size_t vertex_count) {
  if (vertex_count < 2 || vertex_count % 2 != 0) throw DomainError("gems need an even number of vertices");
  while (true) {
    std::vector<GemEdge> edges;
    for (int color = 1; color <= 4; ++color) {
      std::vector<GemVertex> order(vertex_count);
      for (std::size_t i = 0; i < vertex_count; ++i) order[i] = i;
      shuffle(rng, order);
      for (std::size_t i = 0; i < vertex_count; i += 2)
        edges.push_back({std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1]), color});
    }
    try {
      return Gem(std::move(edges));
    } catch (const DomainError&) {
    }
  }
}

bool OracleReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

namespace {

std::vector<PropertyResult> loc123_suite(std::uint64_t seed) {
  Property valid("inputs_valid"), colorable_local("colorable_implies_locally_colorable"),
      orientable_even("orientable_local_equals_even_cyclic"),
      simply_connected("simply_connected_local_equals_colorable"), witness("witness_verifies"),
      brute("brute_force_equivalence"), link("link_loop_law"), loops("generator_loop_permutations"),
      homomorphism("loop_concatenation_composes"), tree_order("path_independence"),
      relabel("relabel_invariance"), euler("euler_equals_betti_sum"),
      subdivision("subdivision_preserves_invariants"), defects("defect_degrees_even");

  for (const auto& [name, t, sc] : suite_complexes(seed)) {
    const int n = t.dimension();
    auto report = validate(t);
    valid.check(report.pure && report.closed && report.connected, [&] { return name; });
    auto dual = dual_graph(t);
    auto hol = holonomy_generators(t, dual);
    auto col = is_colorable(t, hol);
    const bool local = is_locally_colorable(t).locally_colorable;
    auto dump = [&] { return name + ": " + describe(t); };

    colorable_local.check(!col || local, dump);
    if (n >= 2 && is_orientable(t)) orientable_even.check(local == is_even_cyclic(t), dump);
    if (sc && n >= 2) simply_connected.check(local == col.has_value(), dump);
    if (col) witness.check(verify_coloring(t, *col, n + 1), dump);
    if (t.vertices().size() <= kBruteForceVertexBudget) {
      auto bf = brute_force_colorable(t, n + 1);
      brute.check(col.has_value() == bf.has_value() && (!bf || verify_coloring(t, *bf, n + 1)), dump);
    }

    if (n >= 2) {
      for (const auto& [face, degree] : face_census(t).codim2_degree) {
        std::size_t first = 0;
        while (!std::includes(t.simplex(first).begin(), t.simplex(first).end(), face.begin(), face.end()))
          ++first;
        auto start = base_labeling(t, first);
        std::vector<Color> others;
        for (auto [v, c] : start.colors)
          if (!std::binary_search(face.begin(), face.end(), v)) others.push_back(c);
        auto expected = Permutation::transposition(n + 1, others[0], others[1]).power(static_cast<long long>(degree));
        auto actual = link_loop_permutation(t, dual, face);
        link.check(actual == expected && actual.is_identity() == (degree % 2 == 0),
                   [&] { return name + " face of degree " + std::to_string(degree); });
      }
    }

    const auto base = base_labeling(t, hol.base);
    for (std::size_t g = 0; g < hol.generators.size(); ++g) {
      auto end = propagate_along(t, dual, base, hol.generator_loop(dual, g));
      loops.check(labeling_permutation(base, end) == hol.generators[g].permutation,
                  [&] { return name + " generator " + std::to_string(g); });
    }
    for (std::size_t g = 0; g + 1 < hol.generators.size() && g < 12; ++g) {
      auto walk = hol.generator_loop(dual, g);
      auto second = hol.generator_loop(dual, g + 1);
      walk.insert(walk.end(), second.begin() + 1, second.end());
      auto end = propagate_along(t, dual, base, walk);
      homomorphism.check(labeling_permutation(base, end) ==
                             compose(hol.generators[g].permutation, hol.generators[g + 1].permutation),
                         [&] { return name + " generators " + std::to_string(g) + "," + std::to_string(g + 1); });
    }

    auto dfs = holonomy_generators(t, dual, TreeOrder::kDepthFirst);
    tree_order.check(dfs.trivial() == hol.trivial() && (!hol.trivial() || dfs.labelings == hol.labelings), dump);

    auto cycle_types = [](const HolonomyData& h) {
      std::vector<std::vector<int>> types;
      for (const auto& g : h.generators) types.push_back(g.permutation.cycle_type());
      std::sort(types.begin(), types.end());
      return types;
    };
    relabel.check(cycle_types(holonomy_generators(relabel_affine(t, 3, 7))) == cycle_types(hol), dump);

    auto h = homology(t);
    euler.check(h.betti_alternating_sum() == euler_characteristic(t), dump);
    if (n == 3) defects.check(defect_graphs(t).odd_degrees_even(), dump);
  }

  for (const auto& [name, t, sc] : builder_suite()) {
    if (name.rfind("barycentric", 0) == 0 || t.size() > 40) continue;
    auto [sd, dims] = barycentric_subdivide(t);
    auto r = validate(sd);
    bool ok = r.pure && r.closed && r.connected && euler_characteristic(sd) == euler_characteristic(t) &&
              is_orientable(sd) == is_orientable(t) && homology(sd) == homology(t) &&
              verify_coloring(sd, dims, t.dimension() + 1) && is_colorable(sd).has_value();
    subdivision.check(ok, [&] { return name; });
  }

  std::vector<PropertyResult> out;
  for (auto* p : {&valid, &colorable_local, &orientable_even, &simply_connected, &witness, &brute, &link,
                  &loops, &homomorphism, &tree_order, &relabel, &euler, &subdivision, &defects})
    out.push_back(std::move(*p).take());
  return out;
}

std::vector<PropertyResult> circle_suite(std::uint64_t seed) {
  Property parity("single_layer_parity_law"), involution("crossing_is_involution"),
      reverse("reverse_sweep_is_inverse"), cover("double_cover_is_square"),
      exhaustive("sweep_matches_exhaustive_search"), witness("witness_verifies"),
      trivial("trivial_holonomy_iff_colorable");

  for (int m = 3; m <= 12; ++m) {
    std::vector<Rational> points;
    for (int i = 0; i < m; ++i) points.emplace_back(i);
    CircleLayers cl(Rational(m), {points});
    auto hol = circle_holonomy(cl);
    auto col = circle_colorable(cl);
    auto brute = exhaustive_arc_coloring(cl, 2);
    parity.check(hol == Permutation::transposition(2, 1, 2).power(m) && col.has_value() == (m % 2 == 0) &&
                     brute.has_value() == (m % 2 == 0),
                 [&] { return "circle:" + std::to_string(m); });
  }

  SeededRng rng(seed);
  for (int instance = 0; instance < 50; ++instance) {
    auto cl = random_circle_layers(rng, kExhaustiveArcBudget);
    const int j = cl.layer_count();
    auto dump = [&] { return describe(cl); };

    auto state = initial_layer_state(j);
    for (std::uint64_t k = 0, steps = rng.below(5); k < steps; ++k) state.cross(static_cast<int>(rng.below(j)) + 1);
    auto twice = state;
    const int layer = static_cast<int>(rng.below(j)) + 1;
    twice.cross(layer);
    twice.cross(layer);
    involution.check(twice == state, dump);

    auto hol = circle_holonomy(cl);
    reverse.check(circle_holonomy(cl, SweepDirection::kDecreasing) == hol.inverse(), dump);
    cover.check(circle_holonomy(cl.double_cover()) == hol.power(2), dump);

    auto col = circle_colorable(cl);
    auto brute = exhaustive_arc_coloring(cl, j + 1);
    exhaustive.check(col.has_value() == brute.has_value(), dump);
    trivial.check(hol.is_identity() == col.has_value(), dump);
    if (col) {
      auto conflict = arc_conflicts(cl);
      bool proper = verify_arc_coloring(cl, *col, j + 1);
      for (std::size_t a = 0; a < col->size(); ++a)
        for (std::size_t b = a + 1; b < col->size(); ++b) proper = proper && !(conflict[a][b] && (*col)[a] == (*col)[b]);
      witness.check(proper, dump);
    }
  }

  std::vector<PropertyResult> out;
  for (auto* p : {&parity, &involution, &reverse, &cover, &exhaustive, &witness, &trivial})
    out.push_back(std::move(*p).take());
  return out;
}

std::vector<PropertyResult> gamma_suite(std::uint64_t seed) {
  Property laws("data_laws"), dimension("cell_dimension_law"), degree("vertex_degree_law"),
      transfer("transfer_matches_direct_properness"), identity("single_layer_regions_are_cells");

  SeededRng rng(seed);
  for (int instance = 0; instance < 50; ++instance) {
    auto cl = random_circle_layers(rng, 16);
    auto d = circle_intersections(cl);
    auto dump = [&] { return describe(cl); };
    laws.check(d.check().empty(), dump);
    auto gamma = gamma_complex(d);

    for (const auto& cell : gamma.cells)
      dimension.check(cell.dimension == d.n + d.j - static_cast<int>(cell.regions.size()), dump);
    for (const auto& cell : gamma.cells) {
      if (cell.dimension != 0) continue;
      std::size_t edges = 0;
      for (const auto& other : gamma.cells)
        if (other.regions.size() + 1 == cell.regions.size() &&
            std::includes(cell.regions.begin(), cell.regions.end(), other.regions.begin(), other.regions.end()))
          ++edges;
      degree.check(edges == static_cast<std::size_t>(d.n + d.j), dump);
    }
    if (d.j == 1) {
      std::size_t region_cells = 0;
      for (const auto& cell : gamma.cells) region_cells += cell.regions.size() == 1;
      identity.check(region_cells == d.regions.size(), dump);
    }

    auto conflict = arc_conflicts(cl);
    auto proper = circle_colorable(cl);
    for (int trial = 0; trial < 100; ++trial) {
      std::map<RegionId, Color> f;
      for (const auto& r : d.regions) {
        if (proper && trial % 2 == 0)
          f[r.id] = (*proper)[r.id];
        else
          f[r.id] = static_cast<Color>(rng.below(static_cast<std::uint64_t>(d.j) + 1)) + 1;
      }
      if (proper && trial % 2 == 0 && trial % 4 == 2) {
        const auto victim = static_cast<RegionId>(rng.below(d.regions.size()));
        f[victim] = static_cast<Color>(rng.below(static_cast<std::uint64_t>(d.j) + 1)) + 1;
      }
      bool direct = true;
      for (std::size_t a = 0; a < conflict.size(); ++a)
        for (std::size_t b = a + 1; b < conflict.size(); ++b)
          if (conflict[a][b] && f[a] == f[b]) direct = false;
      auto result = gamma_coloring_transfer(d, gamma, f);
      transfer.check(result.proper_on_data == direct && result.proper_on_gamma == direct, dump);
    }
  }

  std::vector<PropertyResult> out;
  for (auto* p : {&laws, &dimension, &degree, &transfer, &identity}) out.push_back(std::move(*p).take());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> random_graph(SeededRng& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto density = rng.between(15, 70);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.between(1, 100) <= density) edges.emplace_back(u, v);
  return edges;
}

std::vector<PropertyResult> gem_suite(std::uint64_t seed) {
  Property fixed("fixed_census"), euler("constructed_gems_have_zero_euler"),
      counts("constructed_gem_counts_match_complex"), lengths("cycle_lengths_match_edge_degrees"),
      regular("edge_count_is_twice_vertex_count"), even("bicolored_cycles_even"),
      planar_components("component_planarity_matches_kuratowski"),
      planar_graphs("planarity_matches_kuratowski");

  {
    auto r = gem_report(two_vertex_gem());
    fixed.check(r.vertex_count == 2 && r.edge_count == 4 && r.cycle_count == 6 && r.region_count == 4 &&
                    r.euler == 0 && r.all_even && r.all_planar,
                [] { return std::string("two-vertex gem"); });
  }

  std::vector<std::pair<std::string, std::pair<Triangulation, Coloring>>> colored;
  {
    auto t = cross_polytope_boundary(3);
    Coloring antipodal;
    for (auto v : t.vertices()) antipodal[v] = static_cast<Color>((v - 1) % 4) + 1;
    colored.push_back({"cross_polytope_boundary:3", {t, antipodal}});
    auto r = gem_report(gem_from_coloring(t, antipodal));
    bool all_four = true;
    for (const auto& [pair, ls] : r.bicolored_cycles)
      for (auto l : ls) all_four = all_four && l == 4;
    fixed.check(r.vertex_count == 16 && r.edge_count == 32 && r.cycle_count == 24 && r.region_count == 8 &&
                    r.euler == 0 && all_four && r.all_planar,
                [] { return std::string("cross_polytope_boundary:3"); });
  }
  colored.push_back({"barycentric(simplex_boundary:3)", barycentric_subdivide(simplex_boundary(3))});
  colored.push_back({"barycentric(cross_polytope_boundary:3)", barycentric_subdivide(cross_polytope_boundary(3))});
  SeededRng rng(seed);
  for (int i = 0; colored.size() < 8; ++i) {
    auto r = random_refinement(rng, i);
    if (r.complex.dimension() != 3) continue;
    colored.push_back({"barycentric(" + r.name + ")", barycentric_subdivide(r.complex)});
  }

  for (const auto& [name, tc] : colored) {
    const auto& [t, f] = tc;
    auto r = gem_report(gem_from_coloring(t, f));
    auto census = face_census(t);
    auto dump = [&] { return name; };
    euler.check(r.euler == 0, dump);
    counts.check(r.vertex_count == t.size() && r.edge_count == census.faces[2].size() &&
                     r.cycle_count == census.faces[1].size() && r.region_count == census.faces[0].size(),
                 dump);
    std::vector<std::size_t> cycle_lengths, degrees;
    for (const auto& [pair, ls] : r.bicolored_cycles) cycle_lengths.insert(cycle_lengths.end(), ls.begin(), ls.end());
    for (const auto& [face, deg] : census.codim2_degree) degrees.push_back(deg);
    std::sort(cycle_lengths.begin(), cycle_lengths.end());
    std::sort(degrees.begin(), degrees.end());
    lengths.check(cycle_lengths == degrees, dump);
  }

  for (int instance = 0; instance < 40; ++instance) {
    const auto v = static_cast<std::size_t>(2 * rng.between(1, 6));
    auto g = random_gem(rng, v);
    auto r = gem_report(g);
    auto dump = [&] { return describe(g); };
    regular.check(r.edge_count == 2 * r.vertex_count, dump);
    bool all_even = true;
    for (const auto& [pair, ls] : r.bicolored_cycles)
      for (auto l : ls) all_even = all_even && l % 2 == 0;
    even.check(all_even && r.all_even, dump);

    // Components of each 3-color subgraph, recomputed here by union-find.
    for (int missing = 1; missing <= 4; ++missing) {
      std::vector<std::size_t> parent(v);
      for (std::size_t i = 0; i < v; ++i) parent[i] = i;
      std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
      };
      for (const auto& e : g.edges())
        if (e.color != missing) parent[root(e.u)] = root(e.v);
      std::map<std::size_t, std::vector<std::size_t>> by_root;
      for (std::size_t i = 0; i < v; ++i) by_root[root(i)].push_back(i);
      std::vector<std::vector<std::size_t>> members;
      for (auto& [rt, ms] : by_root) members.push_back(std::move(ms));
      std::sort(members.begin(), members.end());
      std::vector<bool> oracle;
      for (const auto& ms : members) {
        const auto rt = root(ms.front());
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : g.edges()) {
          if (e.color == missing || root(e.u) != rt) continue;
          auto local = [&](GemVertex x) {
            return static_cast<std::size_t>(std::lower_bound(ms.begin(), ms.end(), x) - ms.begin());
          };
          edges.emplace_back(local(e.u), local(e.v));
        }
        oracle.push_back(kuratowski_planar(ms.size(), edges));
      }
      const auto& triple = r.triples[static_cast<std::size_t>(missing - 1)];
      planar_components.check(triple.component_planar == oracle, dump);
    }
  }

  for (int instance = 0; instance < 120; ++instance) {
    const auto n = static_cast<std::size_t>(rng.between(5, 12));
    auto edges = random_graph(rng, n);
    planar_graphs.check(is_planar(n, edges) == kuratowski_planar(n, edges), [&] {
      std::ostringstream s;
      s << n << " vertices:";
      for (auto [a, b] : edges) s << ' ' << a << '-' << b;
      return s.str();
    });
  }

  std::vector<PropertyResult> out;
  for (auto* p : {&fixed, &euler, &counts, &lengths, &regular, &even, &planar_components, &planar_graphs})
    out.push_back(std::move(*p).take());
  return out;
}

}  // namespace

OracleReport run_oracles(std::string_view suite, std::uint64_t seed) {
  OracleReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  if (suite == "loc123")
    report.properties = loc123_suite(seed);
  else if (suite == "circle")
    report.properties = circle_suite(seed);
  else if (suite == "gamma")
    report.properties = gamma_suite(seed);
  else if (suite == "gem")
    report.properties = gem_suite(seed);
  else
    throw DomainError("unknown oracle suite '" + std::string(suite) + "'");
  return report;
}

}  // namespace holocolor
