#include "holocolor/defects.hpp"

#include <algorithm>
#include <set>

#include "holocolor/error.hpp"
#include "holocolor/holonomy.hpp"

namespace holocolor {

namespace {

std::map<VertexId, std::size_t> degrees(const std::vector<RegionPair>& edges) {
  std::map<VertexId, std::size_t> deg;
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void require_dimension_three(const Triangulation& t) {
  if (t.dimension() != 3)
    throw DomainError("defect graphs need a 3-dimensional complex, got dimension " +
                      std::to_string(t.dimension()));
}

}  // namespace

std::map<VertexId, std::size_t> DefectGraphs::odd_degree() const {
  auto deg = degrees(odd_edges);
  for (VertexId q : defect_regions) deg.try_emplace(q, 0);
  return deg;
}

std::map<VertexId, std::size_t> DefectGraphs::adjacency_degree() const {
  auto deg = degrees(adjacency_edges);
  for (VertexId q : defect_regions) deg.try_emplace(q, 0);
  return deg;
}

bool DefectGraphs::odd_degrees_even() const {
  for (auto [v, d] : odd_degree())
    if (d % 2 != 0) return false;
  return true;
}

bool DefectGraphs::defects_have_degree_two() const {
  for (auto [v, d] : adjacency_degree())
    if (d != 2) return false;
  return true;
}

bool DefectGraphs::adjacency_triangle_free() const {
  std::set<RegionPair> edges(adjacency_edges.begin(), adjacency_edges.end());
  std::map<VertexId, std::vector<VertexId>> adj;
  for (auto [u, v] : adjacency_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto [u, v] : adjacency_edges)
    for (VertexId w : adj[u])
      if (w != v && edges.contains({std::min(v, w), std::max(v, w)})) return false;
  return true;
}

DefectGraphs defect_graphs(const Triangulation& t) {
  require_dimension_three(t);
  require_valid(t);
  const auto census = face_census(t);
  DefectGraphs graphs;
  std::set<VertexId> defects;
  for (const auto& [edge, degree] : census.codim2_degree) {
    if (degree % 2 == 0) continue;
    graphs.odd_edges.emplace_back(edge[0], edge[1]);
    defects.insert(edge.begin(), edge.end());
  }
  graphs.defect_regions.assign(defects.begin(), defects.end());
  graphs.adjacency_edges = graphs.odd_edges;
  for (const auto& [edge, degree] : census.codim2_degree)
    if (degree % 2 == 0 && defects.contains(edge[0]) && defects.contains(edge[1]))
      graphs.adjacency_edges.emplace_back(edge[0], edge[1]);
  std::sort(graphs.adjacency_edges.begin(), graphs.adjacency_edges.end());
  return graphs;
}

std::optional<Coloring> defect_free_coloring(const Triangulation& t) {
  if (!defect_graphs(t).empty()) return std::nullopt;
  auto hol = holonomy_generators(t);
  if (!hol.trivial()) return std::nullopt;
  return is_colorable(t, hol);
}

}  // namespace holocolor
