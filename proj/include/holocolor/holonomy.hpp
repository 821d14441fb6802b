#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holocolor/coloring.hpp"
#include "holocolor/permutation.hpp"
#include "holocolor/triangulation.hpp"

namespace holocolor {

/// A rainbow (n+1)-coloring of the vertices of one top simplex.
struct SimplexLabeling {
  std::size_t simplex = 0;
  /// (vertex, color), sorted by vertex; colors are exactly 1..n+1.
  std::vector<std::pair<VertexId, Color>> colors;

  Color color_of(VertexId v) const;
  bool operator==(const SimplexLabeling&) const = default;
};

/// Labeling of simplex `index` with its i-th smallest vertex colored i.
SimplexLabeling base_labeling(const Triangulation& t, std::size_t index);

/// Forced step across dual edge `edge`: facet vertices keep their colors and the
/// vertex opposite the facet in the other simplex takes the unused color.
/// Throws DomainError if the edge is not incident to `from.simplex`.
SimplexLabeling propagate(const Triangulation& t, const DualGraph& dual,
                          const SimplexLabeling& from, std::size_t edge);

/// Propagates `start` along a dual-graph walk given as simplex indices
/// (walk.front() must equal start.simplex).
SimplexLabeling propagate_along(const Triangulation& t, const DualGraph& dual,
                                const SimplexLabeling& start,
                                const std::vector<std::size_t>& walk);

/// The permutation rho with rho(start color of v) = end color of v, for two
/// labelings of the same simplex.
Permutation labeling_permutation(const SimplexLabeling& start, const SimplexLabeling& end);

enum class TreeOrder {
  kBreadthFirst,  ///< BFS, neighbors in increasing simplex order
  kDepthFirst,    ///< DFS, neighbors in decreasing simplex order
};

struct Generator {
  std::size_t edge = 0;  ///< non-tree dual edge
  Permutation permutation;
};

/// Holonomy of the dual graph relative to a spanning tree.
///
/// The base is the lexicographically least simplex with its canonical
/// labeling. Each non-tree edge (a, b) closes the loop base ~> a -> b ~> base
/// and contributes one generator of the dual graph's fundamental group.
struct HolonomyData {
  std::size_t base = 0;
  /// Tree edge used to reach each simplex; nullopt at the base.
  std::vector<std::optional<std::size_t>> parent_edge;
  std::vector<Generator> generators;  ///< ordered by edge index
  std::vector<SimplexLabeling> labelings;  ///< tree-propagated, per simplex

  bool trivial() const;
  /// Tree path from the base to `simplex`, inclusive.
  std::vector<std::size_t> tree_path(const DualGraph& dual, std::size_t simplex) const;
  /// Closed walk at the base realizing generator `g`.
  std::vector<std::size_t> generator_loop(const DualGraph& dual, std::size_t g) const;
};

HolonomyData holonomy_generators(const Triangulation& t, TreeOrder order = TreeOrder::kBreadthFirst);
HolonomyData holonomy_generators(const Triangulation& t, const DualGraph& dual,
                            TreeOrder order = TreeOrder::kBreadthFirst);

struct LocalColorability {
  bool locally_colorable = true;
  std::vector<Simplex> odd_faces;  ///< (n-2)-faces of odd degree
};

/// Even-sidedness test: every (n-2)-face lies in an even number of simplices.
LocalColorability is_locally_colorable(const Triangulation& t);

/// Global (n+1)-coloring read off the tree labelings, present exactly when
/// every generator is the identity and the labelings agree at each vertex.
std::optional<Coloring> is_colorable(const Triangulation& t);
std::optional<Coloring> is_colorable(const Triangulation& t, const HolonomyData& hol);

/// Cyclic list of simplices around an (n-2)-face, consecutive ones sharing a
/// facet through the face; front() is the least simplex containing it.
std::vector<std::size_t> link_cycle(const Triangulation& t, const DualGraph& dual,
                                    const Simplex& face);

/// Local holonomy once around `face`, starting from the canonical labeling of
/// the first simplex in its link cycle.
Permutation link_loop_permutation(const Triangulation& t, const DualGraph& dual,
                                  const Simplex& face);

struct HolonomyInvariants {
  std::vector<std::vector<int>> cycle_types;  ///< per generator
  std::size_t image_order = 0;
  bool trivial = true;
};

/// Throws BudgetExceeded when n+1 exceeds kClosureDegreeBudget.
HolonomyInvariants holonomy_invariants(const Triangulation& t, const HolonomyData& hol);
HolonomyInvariants holonomy_invariants(const Triangulation& t);

}  // namespace holocolor
