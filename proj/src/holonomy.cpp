#include "holocolor/holonomy.hpp"

#include <algorithm>
#include <deque>

#include "holocolor/error.hpp"

namespace holocolor {

Color SimplexLabeling::color_of(VertexId v) const {
  auto it = std::lower_bound(colors.begin(), colors.end(), std::make_pair(v, Color{0}));
  if (it == colors.end() || it->first != v)
    throw DomainError("vertex " + std::to_string(v) + " is not in the labeled simplex");
  return it->second;
}

SimplexLabeling base_labeling(const Triangulation& t, std::size_t index) {
  SimplexLabeling l;
  l.simplex = index;
  const auto& s = t.simplex(index);
  for (std::size_t i = 0; i < s.size(); ++i) l.colors.emplace_back(s[i], static_cast<Color>(i) + 1);
  return l;
}

SimplexLabeling propagate(const Triangulation& t, const DualGraph& dual, const SimplexLabeling& from,
                          std::size_t edge) {
  const auto& e = dual.edges.at(edge);
  if (from.simplex != e.a && from.simplex != e.b)
    throw DomainError("dual edge " + std::to_string(edge) + " is not incident to simplex " +
                      std::to_string(from.simplex));
  const std::size_t target = from.simplex == e.a ? e.b : e.a;
  const auto& s = t.simplex(target);
  const auto colors = static_cast<Color>(s.size());

  SimplexLabeling next;
  next.simplex = target;
  std::vector<bool> used(s.size() + 1, false);
  for (VertexId v : e.facet) used[static_cast<std::size_t>(from.color_of(v))] = true;
  Color unused = 0;
  for (Color c = 1; c <= colors; ++c)
    if (!used[static_cast<std::size_t>(c)]) unused = c;
  for (VertexId v : s) {
    bool on_facet = std::binary_search(e.facet.begin(), e.facet.end(), v);
    next.colors.emplace_back(v, on_facet ? from.color_of(v) : unused);
  }
  return next;
}

SimplexLabeling propagate_along(const Triangulation& t, const DualGraph& dual, const SimplexLabeling& start,
                                const std::vector<std::size_t>& walk) {
  if (walk.empty() || walk.front() != start.simplex)
    throw DomainError("walk must begin at the labeled simplex");
  SimplexLabeling current = start;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    auto edge = dual.edge_between(walk[i - 1], walk[i]);
    if (!edge)
      throw DomainError("simplices " + std::to_string(walk[i - 1]) + " and " + std::to_string(walk[i]) +
                        " are not adjacent");
    current = propagate(t, dual, current, *edge);
  }
  return current;
}

Permutation labeling_permutation(const SimplexLabeling& start, const SimplexLabeling& end) {
  if (start.simplex != end.simplex || start.colors.size() != end.colors.size())
    throw DomainError("labelings belong to different simplices");
  std::vector<int> images(start.colors.size());
  for (std::size_t i = 0; i < start.colors.size(); ++i)
    images[static_cast<std::size_t>(start.colors[i].second - 1)] = end.colors[i].second;
  return Permutation(std::move(images));
}

bool HolonomyData::trivial() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Generator& g) { return g.permutation.is_identity(); });
}

std::vector<std::size_t> HolonomyData::tree_path(const DualGraph& dual, std::size_t simplex) const {
  std::vector<std::size_t> path{simplex};
  while (parent_edge.at(path.back())) {
    const auto& e = dual.edges[*parent_edge[path.back()]];
    path.push_back(e.a == path.back() ? e.b : e.a);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::size_t> HolonomyData::generator_loop(const DualGraph& dual, std::size_t g) const {
  const auto& e = dual.edges.at(generators.at(g).edge);
  auto loop = tree_path(dual, e.a);
  auto back = tree_path(dual, e.b);
  loop.insert(loop.end(), back.rbegin(), back.rend());
  return loop;
}

HolonomyData holonomy_generators(const Triangulation& t, TreeOrder order) {
  require_valid(t);
  return holonomy_generators(t, dual_graph(t), order);
}

HolonomyData holonomy_generators(const Triangulation& t, const DualGraph& dual, TreeOrder order) {
  const std::size_t count = t.size();
  HolonomyData hol;
  hol.base = 0;
  hol.parent_edge.assign(count, std::nullopt);
  std::vector<std::optional<SimplexLabeling>> labels(count);
  std::vector<bool> in_tree(dual.edges.size(), false);
  labels[0] = base_labeling(t, 0);

  auto attach = [&](std::size_t from, std::size_t to, std::size_t edge) {
    hol.parent_edge[to] = edge;
    in_tree[edge] = true;
    labels[to] = propagate(t, dual, *labels[from], edge);
  };

  if (order == TreeOrder::kBreadthFirst) {
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto [v, e] : dual.adjacency[u]) {
        if (labels[v]) continue;
        attach(u, v, e);
        queue.push_back(v);
      }
    }
  } else {
    // Each frame remembers how many neighbors (from the top) it has tried.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
      auto& [u, tried] = stack.back();
      const auto& adj = dual.adjacency[u];
      if (tried == adj.size()) {
        stack.pop_back();
        continue;
      }
      auto [v, e] = adj[adj.size() - 1 - tried];
      ++tried;
      if (labels[v]) continue;
      attach(u, v, e);
      stack.emplace_back(v, 0);
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (!labels[i]) throw DomainError("dual graph is disconnected");
    hol.labelings.push_back(std::move(*labels[i]));
  }
  for (std::size_t e = 0; e < dual.edges.size(); ++e) {
    if (in_tree[e]) continue;
    // Crossing the edge from a's tree labeling lands on pi applied to b's tree
    // labeling; walking b's tree path home carries pi back to the base.
    const auto& edge = dual.edges[e];
    auto crossed = propagate(t, dual, hol.labelings[edge.a], e);
    hol.generators.push_back({e, labeling_permutation(hol.labelings[edge.b], crossed)});
  }
  return hol;
}

LocalColorability is_locally_colorable(const Triangulation& t) {
  LocalColorability result;
  if (t.dimension() < 2) return result;
  result.odd_faces = face_census(t).odd_codim2_faces();
  result.locally_colorable = result.odd_faces.empty();
  return result;
}

std::optional<Coloring> is_colorable(const Triangulation& t) {
  return is_colorable(t, holonomy_generators(t));
}

std::optional<Coloring> is_colorable(const Triangulation&, const HolonomyData& hol) {
  if (!hol.trivial()) return std::nullopt;
  Coloring f;
  for (const auto& l : hol.labelings)
    for (auto [v, c] : l.colors) {
      auto [it, fresh] = f.emplace(v, c);
      // Only a vertex whose star is pinched can receive two forced colors.
      if (!fresh && it->second != c) return std::nullopt;
    }
  return f;
}

std::vector<std::size_t> link_cycle(const Triangulation& t, const DualGraph& dual, const Simplex& face) {
  Simplex f = face;
  std::sort(f.begin(), f.end());
  if (f.size() + 2 != static_cast<std::size_t>(t.dimension()) + 1)
    throw DomainError("link cycles are defined for faces of codimension 2");

  auto extras = [&](std::size_t s) {
    Simplex out;
    const auto& simplex = t.simplex(s);
    std::set_difference(simplex.begin(), simplex.end(), f.begin(), f.end(), std::back_inserter(out));
    return out;
  };
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < t.size() && !start; ++i) {
    const auto& s = t.simplex(i);
    if (std::includes(s.begin(), s.end(), f.begin(), f.end())) start = i;
  }
  if (!start) throw DomainError("face is not in the triangulation");

  // Leave the start through the facet that omits its smaller extra vertex;
  // afterwards always leave through the facet not just entered.
  std::vector<std::size_t> cycle{*start};
  VertexId keep = extras(*start)[1];
  std::size_t current = *start;
  while (true) {
    std::optional<std::size_t> next;
    for (auto [v, e] : dual.adjacency[current]) {
      const auto& facet = dual.edges[e].facet;
      if (std::includes(facet.begin(), facet.end(), f.begin(), f.end()) &&
          std::binary_search(facet.begin(), facet.end(), keep)) {
        next = v;
        break;
      }
    }
    if (!next) throw DomainError("link of the face is not closed");
    // Next exit keeps the vertex that just entered and drops `keep`.
    auto ex = extras(*next);
    VertexId fresh = ex[0] == keep ? ex[1] : ex[0];
    current = *next;
    if (current == *start) break;
    cycle.push_back(current);
    if (cycle.size() > t.size()) throw DomainError("link walk did not close");
    keep = fresh;
  }
  return cycle;
}

Permutation link_loop_permutation(const Triangulation& t, const DualGraph& dual, const Simplex& face) {
  auto walk = link_cycle(t, dual, face);
  walk.push_back(walk.front());
  auto start = base_labeling(t, walk.front());
  return labeling_permutation(start, propagate_along(t, dual, start, walk));
}

HolonomyInvariants holonomy_invariants(const Triangulation& t, const HolonomyData& hol) {
  const int degree = t.dimension() + 1;
  if (degree > kClosureDegreeBudget)
    throw BudgetExceeded("holonomy invariants need n + 1 <= " + std::to_string(kClosureDegreeBudget));
  HolonomyInvariants inv;
  std::vector<Permutation> gens;
  for (const auto& g : hol.generators) {
    inv.cycle_types.push_back(g.permutation.cycle_type());
    gens.push_back(g.permutation);
  }
  inv.image_order = subgroup_closure(degree, gens).order;
  inv.trivial = hol.trivial();
  return inv;
}

HolonomyInvariants holonomy_invariants(const Triangulation& t) {
  return holonomy_invariants(t, holonomy_generators(t));
}

}  // namespace holocolor
