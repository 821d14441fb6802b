#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "holocolor/circle_layers.hpp"
#include "holocolor/coloring.hpp"

namespace holocolor {

using RegionId = std::size_t;
using RegionSet = std::vector<RegionId>;  ///< sorted, distinct

struct LayeredRegion {
  RegionId id = 0;
  int layer = 0;  ///< 1-based
  bool operator==(const LayeredRegion&) const = default;
};

/// Every set of regions of a j-layer complex with nonempty common
/// intersection, tagged with the dimension of that intersection.
struct LayeredIntersectionData {
  int n = 0;
  int j = 0;
  std::vector<LayeredRegion> regions;
  std::map<RegionSet, int> intersections;

  int layer_of(RegionId r) const;
  /// Layers met by `q`, sorted.
  std::vector<int> layers_of(const RegionSet& q) const;

  /// Structural laws: singletons present with dimension n, closed under
  /// nonempty subsets with non-increasing dimension, and two regions of one
  /// layer only meet in lower dimension. Returns a description of the first
  /// violation, or an empty string.
  std::string check() const;

  bool operator==(const LayeredIntersectionData&) const = default;
};

/// Throws ParseError / DomainError.
LayeredIntersectionData parse_intersection_json(std::string_view text);
std::string serialize_intersection_json(const LayeredIntersectionData& d);

/// Regions are the arcs; dimension 1 where arcs overlap in an interval and 0
/// where they only share boundary points.
LayeredIntersectionData circle_intersections(const CircleLayers& cl);

struct GammaCell {
  RegionSet regions;
  std::vector<int> layers;
  int dimension = 0;
};

/// Product complex on M x B^{j-1} with one cell per intersecting region set.
/// Cell Q has dimension n + j - |Q| and is a face of cell Q' iff Q contains Q'.
struct GammaComplex {
  int n = 0;
  int j = 0;
  std::vector<GammaCell> cells;         ///< ordered by region set
  std::map<RegionSet, std::size_t> index;

  /// Codimension-one faces of a cell: the present supersets with one more region.
  std::vector<std::size_t> facets_of(std::size_t cell) const;
  /// Codimension-one cofaces: present subsets with one fewer region.
  std::vector<std::size_t> cofacets_of(std::size_t cell) const;

  /// Cell counts indexed by dimension 0..n+j-1.
  std::vector<std::size_t> census() const;
  std::vector<std::size_t> vertices() const;
  std::vector<std::size_t> regions() const;
};

/// Throws DomainError when the data breaks its structural laws, a tag
/// disagrees with dim = n + |layers| - |Q|, |Q| > n + j, or a vertex does
/// not have n + j incident edges.
GammaComplex gamma_complex(const LayeredIntersectionData& d);

struct TransferResult {
  bool proper_on_data = false;
  bool proper_on_gamma = false;
};

/// Properness of `f` on the layered data and of its transfer r -> Gamma_{r}
/// on the region cells of the product complex. Throws DomainError when `f`
/// misses a region.
TransferResult gamma_coloring_transfer(const LayeredIntersectionData& d,
                                       const GammaComplex& gamma,
                                       const std::map<RegionId, Color>& f);

}  // namespace holocolor
