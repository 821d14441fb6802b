#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "holocolor/coloring.hpp"
#include "holocolor/triangulation.hpp"

namespace holocolor {

using RegionPair = std::pair<VertexId, VertexId>;

/// Regions of a closed 3-complex whose neighborhoods cannot be 4-colored,
/// and the two graphs that join them.
///
/// A region's neighborhood is the star of its vertex, so it fails to be
/// 4-colorable exactly when some edge through the vertex lies in an odd
/// number of tetrahedra. The odd graph has one edge per such odd edge; the
/// adjacency graph adds every even edge whose endpoints are both defective.
struct DefectGraphs {
  std::vector<VertexId> defect_regions;   ///< sorted
  std::vector<RegionPair> odd_edges;      ///< sorted, first < second
  std::vector<RegionPair> adjacency_edges;  ///< superset of odd_edges, sorted

  std::map<VertexId, std::size_t> odd_degree() const;
  std::map<VertexId, std::size_t> adjacency_degree() const;

  bool odd_degrees_even() const;
  bool empty() const noexcept { return adjacency_edges.empty(); }

  // Structural conditions that are reported, not enforced.
  bool defects_have_degree_two() const;
  bool adjacency_triangle_free() const;
};

/// Throws DomainError unless dimension is 3.
DefectGraphs defect_graphs(const Triangulation& t);

/// A 4-coloring when the adjacency graph is empty and the holonomy is
/// trivial; nullopt otherwise. Throws DomainError unless dimension is 3.
std::optional<Coloring> defect_free_coloring(const Triangulation& t);

}  // namespace holocolor
