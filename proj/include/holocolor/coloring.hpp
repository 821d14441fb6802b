#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "holocolor/triangulation.hpp"

namespace holocolor {

/// Colors are 1-based.
using Color = int;

/// Region (vertex of the triangulation) to color.
using Coloring = std::map<VertexId, Color>;

/// True iff every edge of `t` is bichromatic and all colors lie in 1..colors.
/// Throws DomainError when `f` misses a vertex of `t`.
bool verify_coloring(const Triangulation& t, const Coloring& f, int colors);

/// Exhaustive backtracking over proper colorings of the 1-skeleton.
///
/// First-fail search with forward checking: the next vertex is the one with
/// the fewest remaining colors (ties: higher degree, then smaller id), colors
/// are tried in ascending order. The witness is deterministic. Throws
/// BudgetExceeded above `kBruteForceVertexBudget` vertices.
std::optional<Coloring> brute_force_colorable(const Triangulation& t, int colors);

inline constexpr std::size_t kBruteForceVertexBudget = 40;

}  // namespace holocolor
