#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace holocolor {

using VertexId = std::uint64_t;

/// Sorted list of distinct vertex ids.
using Simplex = std::vector<VertexId>;

/// A pure n-dimensional simplicial complex, stored as its list of top simplices.
///
/// Each top simplex is a region-vertex of the dual coloring complex: vertices
/// of the triangulation are regions, n-simplices are vertices of the dual, and
/// (n-1)-faces are dual edges. Simplices are kept sorted and lexicographically
/// ordered, so a simplex index is a canonical handle.
///
/// Construction checks arity and duplicates only; the closed-pseudomanifold
/// and connectivity conditions are reported by `validate`.
class Triangulation {
 public:
  /// Throws DomainError on n < 1, wrong arity, repeated vertex, or duplicate simplex.
  Triangulation(int dimension, std::vector<Simplex> simplices);

  int dimension() const noexcept { return dimension_; }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  const Simplex& simplex(std::size_t index) const { return simplices_.at(index); }
  std::size_t size() const noexcept { return simplices_.size(); }

  /// Sorted ids of all vertices.
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }

  /// Index of the simplex with exactly this vertex set (any order).
  std::optional<std::size_t> find(Simplex s) const;

  bool operator==(const Triangulation&) const = default;

 private:
  int dimension_;
  std::vector<Simplex> simplices_;
  std::vector<VertexId> vertices_;
};

/// Parses the `dim <n>` text format. Lines starting with '#' are comments.
Triangulation parse_triangulation(std::string_view text);

/// Inverse of parse_triangulation; one simplex per line in canonical order.
std::string serialize_triangulation(const Triangulation& t);

struct ValidationReport {
  bool pure = true;
  bool closed = true;
  bool connected = true;

  /// (n-1)-faces not contained in exactly two simplices, with their counts.
  std::vector<std::pair<Simplex, std::size_t>> bad_facets;
  /// Dual-graph components as sorted simplex index lists; size 1 when connected.
  std::vector<std::vector<std::size_t>> components;

  bool ok() const noexcept { return pure && closed && connected; }
};

ValidationReport validate(const Triangulation& t);

/// Throws DomainError naming the first failing check when `t` is not valid.
void require_valid(const Triangulation& t);

struct FaceCensus {
  /// faces[k] is the sorted list of k-faces (k+1 vertices), 0 <= k <= n.
  std::vector<std::vector<Simplex>> faces;
  /// Number of n-simplices containing each (n-2)-face. Empty when n == 1.
  std::map<Simplex, std::size_t> codim2_degree;

  std::vector<Simplex> odd_codim2_faces() const;
};

FaceCensus face_census(const Triangulation& t);

struct DualEdge {
  std::size_t a = 0;  ///< smaller simplex index
  std::size_t b = 0;  ///< larger simplex index
  Simplex facet;      ///< shared (n-1)-face
};

/// Facet-adjacency graph on the top simplices.
struct DualGraph {
  std::vector<DualEdge> edges;  ///< sorted by (a, b)
  /// Per simplex: (neighbor, edge index), sorted by neighbor index.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency;

  /// Edge joining two simplices, if any.
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;
};

/// Pairs simplices through every facet shared by exactly two of them.
DualGraph dual_graph(const Triangulation& t);

bool is_orientable(const Triangulation& t);
bool is_even_cyclic(const Triangulation& t);
long long euler_characteristic(const Triangulation& t);

/// Vertex of `s` not in `facet`. Throws DomainError unless `facet` is a facet of `s`.
VertexId opposite_vertex(const Simplex& s, const Simplex& facet);

}  // namespace holocolor
