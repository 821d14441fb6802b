#include "holocolor/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "holocolor/error.hpp"

namespace holocolor {

namespace {

// 1-skeleton as adjacency lists over indices into t.vertices().
std::vector<std::vector<std::size_t>> skeleton(const Triangulation& t) {
  const auto& verts = t.vertices();
  auto index = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<std::vector<std::size_t>> adj(verts.size());
  for (const auto& s : t.simplices())
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = i + 1; k < s.size(); ++k) {
        adj[index(s[i])].push_back(index(s[k]));
        adj[index(s[k])].push_back(index(s[i]));
      }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

class Backtracker {
 public:
  Backtracker(std::vector<std::vector<std::size_t>> adj, int colors)
      : adj_(std::move(adj)),
        colors_(colors),
        assigned_(adj_.size(), 0),
        domain_(adj_.size(), colors >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << colors) - 1) {}

  bool solve() { return extend(0, 0); }
  const std::vector<Color>& assignment() const { return assigned_; }

 private:
  // First-fail: fewest remaining colors, then highest degree, then lowest id.
  std::size_t pick() const {
    std::size_t best = adj_.size();
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (assigned_[v] != 0) continue;
      if (best == adj_.size()) {
        best = v;
        continue;
      }
      auto dv = std::popcount(domain_[v]), db = std::popcount(domain_[best]);
      if (dv < db || (dv == db && adj_[v].size() > adj_[best].size())) best = v;
    }
    return best;
  }

  bool extend(std::size_t done, int used) {
    if (done == adj_.size()) return true;
    const std::size_t v = pick();
    // Colors beyond used+1 are symmetric to used+1.
    const int top = std::min(colors_, used + 1);
    for (int c = 1; c <= top; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << (c - 1);
      if (!(domain_[v] & bit)) continue;
      assigned_[v] = c;
      std::vector<std::size_t> pruned;
      bool wiped = false;
      for (std::size_t w : adj_[v]) {
        if (assigned_[w] != 0 || !(domain_[w] & bit)) continue;
        domain_[w] &= ~bit;
        pruned.push_back(w);
        if (domain_[w] == 0) wiped = true;
      }
      if (!wiped && extend(done + 1, std::max(used, c))) return true;
      for (std::size_t w : pruned) domain_[w] |= bit;
      assigned_[v] = 0;
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  int colors_;
  std::vector<Color> assigned_;
  std::vector<std::uint64_t> domain_;
};

}  // namespace

bool verify_coloring(const Triangulation& t, const Coloring& f, int colors) {
  for (VertexId v : t.vertices())
    if (!f.contains(v)) throw DomainError("coloring misses vertex " + std::to_string(v));
  for (VertexId v : t.vertices()) {
    Color c = f.at(v);
    if (c < 1 || c > colors) return false;
  }
  for (const auto& s : t.simplices())
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = i + 1; k < s.size(); ++k)
        if (f.at(s[i]) == f.at(s[k])) return false;
  return true;
}

std::optional<Coloring> brute_force_colorable(const Triangulation& t, int colors) {
  if (colors < 1 || colors > 64) throw DomainError("color count must be in 1..64");
  if (t.vertices().size() > kBruteForceVertexBudget)
    throw BudgetExceeded("brute-force coloring is limited to " + std::to_string(kBruteForceVertexBudget) +
                         " vertices, got " + std::to_string(t.vertices().size()));
  Backtracker search(skeleton(t), colors);
  if (!search.solve()) return std::nullopt;
  Coloring f;
  for (std::size_t i = 0; i < t.vertices().size(); ++i) f.emplace(t.vertices()[i], search.assignment()[i]);
  return f;
}

}  // namespace holocolor
