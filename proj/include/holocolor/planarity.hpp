#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace holocolor {

/// Undirected multigraph on vertices 0..n-1. Loops are ignored and parallel
/// edges collapsed before testing, since neither affects planarity.
bool is_planar(std::size_t vertex_count,
               const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace holocolor
