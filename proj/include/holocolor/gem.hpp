#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "holocolor/coloring.hpp"
#include "holocolor/triangulation.hpp"

namespace holocolor {

using GemVertex = std::uint64_t;

struct GemEdge {
  GemVertex u = 0;  ///< u < v
  GemVertex v = 0;
  int color = 0;    ///< 1..4

  auto operator<=>(const GemEdge&) const = default;
};

/// Graph diagram of a closed 3-complex with four colored regions: a connected
/// 4-regular multigraph whose four edges at every vertex carry colors 1..4.
class Gem {
 public:
  /// Throws DomainError on loops, colors outside 1..4, degree != 4, a color
  /// repeated at a vertex, or disconnection.
  explicit Gem(std::vector<GemEdge> edges);

  const std::vector<GemEdge>& edges() const noexcept { return edges_; }
  const std::vector<GemVertex>& vertices() const noexcept { return vertices_; }
  /// Neighbor across the edge of `color` at `v`.
  GemVertex neighbor(GemVertex v, int color) const;

  bool operator==(const Gem&) const = default;

 private:
  std::size_t position(GemVertex v) const;

  std::vector<GemEdge> edges_;
  std::vector<GemVertex> vertices_;
  std::vector<std::array<GemVertex, 4>> across_;
};

Gem parse_gem(std::string_view text);
std::string serialize_gem(const Gem& g);

/// Two vertices joined by four edges of distinct colors.
Gem two_vertex_gem();

struct TripleAnalysis {
  int missing_color = 0;
  std::vector<std::size_t> component_sizes;  ///< components ordered by least vertex
  std::vector<bool> component_planar;
};

struct GemReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  /// Color pairs (1,2) (1,3) (1,4) (2,3) (2,4) (3,4) and their cycle lengths,
  /// each list sorted ascending.
  std::vector<std::pair<std::pair<int, int>, std::vector<std::size_t>>> bicolored_cycles;
  std::vector<TripleAnalysis> triples;  ///< missing colors 1..4
  std::size_t cycle_count = 0;   ///< F
  std::size_t region_count = 0;  ///< R
  long long euler = 0;           ///< V - E + F - R
  bool all_even = false;
  bool all_planar = false;
};

GemReport gem_report(const Gem& g);

/// Vertices are simplex indices; each dual edge gets the color of the vertex
/// opposite the shared facet. Throws DomainError unless n == 3 and `f` is a
/// proper 4-coloring.
Gem gem_from_coloring(const Triangulation& t, const Coloring& f);

/// Graphviz multigraph (1 red, 2 green, 3 blue, 4 black) with the gem file
/// embedded in a leading comment block.
std::string export_dot(const Gem& g);

/// Reads back the gem embedded by export_dot.
Gem parse_gem_from_dot(std::string_view dot);

}  // namespace holocolor
