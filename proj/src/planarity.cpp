#include "holocolor/planarity.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace holocolor {

bool is_planar(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::pair<std::size_t, std::size_t>> simple;
  for (auto [u, v] : edges) {
    if (u == v) continue;
    simple.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(simple.begin(), simple.end());
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());

  if (vertex_count < 5) return true;
  if (vertex_count >= 3 && simple.size() > 3 * vertex_count - 6) return false;

  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(vertex_count);
  for (auto [u, v] : simple) boost::add_edge(u, v, g);
  return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace holocolor
