#include "holocolor/gem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "holocolor/error.hpp"
#include "holocolor/holonomy.hpp"
#include "holocolor/planarity.hpp"
#include "text_util.hpp"

namespace holocolor {

namespace {

constexpr std::array<std::pair<int, int>, 6> kColorPairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
constexpr std::array<const char*, 4> kDotColors{"red", "green", "blue", "black"};

std::string edge_string(const GemEdge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", color " + std::to_string(e.color) + ")";
}

}  // namespace

Gem::Gem(std::vector<GemEdge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) throw DomainError("loop edge at vertex " + std::to_string(e.u));
    if (e.color < 1 || e.color > 4) throw DomainError("edge " + edge_string(e) + " has color outside 1..4");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (edges.empty()) throw DomainError("gem has no edges");

  std::map<GemVertex, std::array<std::optional<GemVertex>, 4>> slots;
  std::map<GemVertex, int> degree;
  for (const auto& e : edges)
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      ++degree[x];
      auto& slot = slots[x][static_cast<std::size_t>(e.color - 1)];
      if (slot) throw DomainError("color " + std::to_string(e.color) + " repeated at vertex " + std::to_string(x));
      slot = y;
    }
  for (auto [v, d] : degree)
    if (d != 4) throw DomainError("vertex " + std::to_string(v) + " has degree " + std::to_string(d) + ", expected 4");

  edges_ = std::move(edges);
  for (const auto& [v, s] : slots) {
    vertices_.push_back(v);
    across_.push_back({*s[0], *s[1], *s[2], *s[3]});
  }

  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (GemVertex w : across_[i]) {
      auto k = position(w);
      if (!seen[k]) {
        seen[k] = true;
        ++reached;
        stack.push_back(k);
      }
    }
  }
  if (reached != vertices_.size()) {
    auto lost = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), false) - seen.begin());
    throw DomainError("gem is disconnected: vertex " + std::to_string(vertices_[lost]) + " is unreachable");
  }
}

std::size_t Gem::position(GemVertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw DomainError("unknown gem vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

GemVertex Gem::neighbor(GemVertex v, int color) const {
  return across_[position(v)].at(static_cast<std::size_t>(color - 1));
}

Gem parse_gem(std::string_view text) {
  bool header = false;
  std::vector<GemEdge> edges;
  std::size_t line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto tokens = detail::split_ws(line);
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "gem" || tokens[1] != "3") throw ParseError("expected 'gem 3'", line_no);
      header = true;
      continue;
    }
    if (tokens.size() != 3) throw ParseError("expected 'u v color'", line_no);
    auto u = detail::parse_uint(tokens[0]);
    auto v = detail::parse_uint(tokens[1]);
    auto c = detail::parse_uint(tokens[2]);
    if (!u || !v || !c) throw ParseError("expected non-negative integers", line_no);
    if (*c < 1 || *c > 4) throw ParseError("color " + std::string(tokens[2]) + " outside 1..4", line_no);
    if (*u == *v) throw ParseError("loop edge at vertex " + std::to_string(*u), line_no);
    edges.push_back({*u, *v, static_cast<int>(*c)});
  }
  if (!header) throw ParseError("missing 'gem 3' header");
  return Gem(std::move(edges));
}

std::string serialize_gem(const Gem& g) {
  std::ostringstream out;
  out << "gem 3\n";
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
  return out.str();
}

Gem two_vertex_gem() { return Gem({{0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}}); }

GemReport gem_report(const Gem& g) {
  GemReport report;
  const auto& verts = g.vertices();
  report.vertex_count = verts.size();
  report.edge_count = g.edges().size();
  auto index = [&](GemVertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };

  report.all_even = true;
  for (auto [a, b] : kColorPairs) {
    std::vector<bool> seen(verts.size(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (seen[i]) continue;
      // Alternate a, b, a, ... until the walk closes; every step is one edge.
      std::size_t length = 0;
      GemVertex v = verts[i];
      int color = a;
      do {
        seen[index(v)] = true;
        v = g.neighbor(v, color);
        color = color == a ? b : a;
        ++length;
      } while (!(v == verts[i] && color == a));
      lengths.push_back(length);
      if (length % 2 != 0) report.all_even = false;
    }
    std::sort(lengths.begin(), lengths.end());
    report.cycle_count += lengths.size();
    report.bicolored_cycles.push_back({{a, b}, std::move(lengths)});
  }

  report.all_planar = true;
  for (int missing = 1; missing <= 4; ++missing) {
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : g.edges())
      if (e.color != missing) parent[root(index(e.u))] = root(index(e.v));

    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < verts.size(); ++i) by_root[root(i)].push_back(i);
    // Components in order of their least vertex.
    std::vector<std::vector<std::size_t>> members;
    for (auto& [r, group] : by_root) members.push_back(std::move(group));
    std::sort(members.begin(), members.end());
    TripleAnalysis triple;
    triple.missing_color = missing;
    for (const auto& group : members) {
      std::map<std::size_t, std::size_t> local;
      for (std::size_t i : group) local.emplace(i, local.size());
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (const auto& e : g.edges())
        if (e.color != missing && local.contains(index(e.u))) edges.emplace_back(local.at(index(e.u)), local.at(index(e.v)));
      triple.component_sizes.push_back(group.size());
      bool planar = is_planar(group.size(), edges);
      triple.component_planar.push_back(planar);
      if (!planar) report.all_planar = false;
    }
    report.region_count += triple.component_sizes.size();
    report.triples.push_back(std::move(triple));
  }

  report.euler = static_cast<long long>(report.vertex_count) - static_cast<long long>(report.edge_count) +
                 static_cast<long long>(report.cycle_count) - static_cast<long long>(report.region_count);
  return report;
}

Gem gem_from_coloring(const Triangulation& t, const Coloring& f) {
  if (t.dimension() != 3)
    throw DomainError("gems encode 3-dimensional complexes, got dimension " + std::to_string(t.dimension()));
  require_valid(t);
  if (!verify_coloring(t, f, 4)) throw DomainError("assignment is not a proper 4-coloring");
  const auto dual = dual_graph(t);
  std::vector<GemEdge> edges;
  for (const auto& e : dual.edges) {
    // The same color sits opposite the facet on both sides.
    edges.push_back({e.a, e.b, f.at(opposite_vertex(t.simplex(e.a), e.facet))});
  }
  return Gem(std::move(edges));
}

std::string export_dot(const Gem& g) {
  std::ostringstream out;
  out << "/* " << serialize_gem(g) << "*/\n";
  out << "graph gem {\n";
  for (GemVertex v : g.vertices()) out << "  " << v << ";\n";
  for (const auto& e : g.edges())
    out << "  " << e.u << " -- " << e.v << " [color=" << kDotColors[static_cast<std::size_t>(e.color - 1)]
        << "];\n";
  out << "}\n";
  return out.str();
}

Gem parse_gem_from_dot(std::string_view dot) {
  auto open = dot.find("/*");
  auto close = dot.find("*/", open == std::string_view::npos ? 0 : open);
  if (open == std::string_view::npos || close == std::string_view::npos)
    throw ParseError("no embedded gem comment in DOT text");
  return parse_gem(dot.substr(open + 2, close - open - 2));
}

}  // namespace holocolor
