#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holocolor/circle_layers.hpp"
#include "holocolor/gem.hpp"
#include "holocolor/random.hpp"
#include "holocolor/triangulation.hpp"

namespace holocolor {

// Independent checks used by the property suites. None of these share an
// algorithmic path with the operations they are compared against.

/// Planarity by Kuratowski's theorem: a simple graph with E > 3V - 6 is
/// nonplanar; otherwise search every choice of branch vertices for a K5 or
/// K3,3 subdivision with internally disjoint paths. Limited to 12 vertices.
bool kuratowski_planar(std::size_t vertex_count,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges);

inline constexpr std::size_t kKuratowskiVertexBudget = 12;

/// Exhaustive search over every assignment of 1..colors to the arcs,
/// returning the lexicographically least proper one. Limited to 12 arcs.
std::optional<ArcColoring> exhaustive_arc_coloring(const CircleLayers& cl, int colors);

inline constexpr std::size_t kExhaustiveArcBudget = 12;

struct NamedComplex {
  std::string name;
  Triangulation complex;
  bool simply_connected = false;
};

/// Builder library plus barycentric subdivisions of the small builders.
std::vector<NamedComplex> builder_suite();

/// Random stellar refinement of an orientable builder, optionally followed
/// by a full barycentric subdivision.
NamedComplex random_refinement(SeededRng& rng, int index);

/// Builder suite followed by `refinements` random refinements.
std::vector<NamedComplex> suite_complexes(std::uint64_t seed, int refinements = 20);

/// Random transverse circle layers with at most `max_arcs` arcs in total.
CircleLayers random_circle_layers(SeededRng& rng, std::size_t max_arcs);

/// Four random perfect matchings on `vertex_count` (even) vertices, resampled
/// until connected.
Gem random_gem(SeededRng& rng, std::size_t vertex_count);

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

struct OracleReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// Suites: loc123, circle, gamma, gem. Throws DomainError on unknown names.
OracleReport run_oracles(std::string_view suite, std::uint64_t seed);

inline constexpr std::string_view kOracleSuites[] = {"loc123", "circle", "gamma", "gem"};

}  // namespace holocolor
