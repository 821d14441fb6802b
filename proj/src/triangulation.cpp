#include "holocolor/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "holocolor/error.hpp"
#include "text_util.hpp"

namespace holocolor {

namespace {

std::string simplex_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Simplex without(const Simplex& s, std::size_t skip) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != skip) f.push_back(s[i]);
  return f;
}

// Calls visit(subset) for every (size)-subset of s, in lexicographic order.
template <typename Visit>
void for_each_subset(const Simplex& s, std::size_t size, Visit&& visit) {
  if (size > s.size()) return;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  Simplex sub(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) sub[i] = s[idx[i]];
    visit(sub);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == s.size() - size + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t k = i; k < size; ++k) idx[k] = idx[k - 1] + 1;
  }
}

}  // namespace

Triangulation::Triangulation(int dimension, std::vector<Simplex> simplices)
    : dimension_(dimension) {
  if (dimension < 1) throw DomainError("dimension must be at least 1");
  const auto arity = static_cast<std::size_t>(dimension) + 1;
  for (auto& s : simplices) {
    if (s.size() != arity)
      throw DomainError("simplex " + simplex_string(s) + " has " + std::to_string(s.size()) +
                        " vertices, expected " + std::to_string(arity));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw DomainError("repeated vertex in simplex " + simplex_string(s));
  }
  std::sort(simplices.begin(), simplices.end());
  if (auto dup = std::adjacent_find(simplices.begin(), simplices.end()); dup != simplices.end())
    throw DomainError("duplicate simplex " + simplex_string(*dup));
  if (simplices.empty()) throw DomainError("triangulation has no simplices");
  simplices_ = std::move(simplices);

  std::set<VertexId> verts;
  for (const auto& s : simplices_) verts.insert(s.begin(), s.end());
  vertices_.assign(verts.begin(), verts.end());
}

std::optional<std::size_t> Triangulation::find(Simplex s) const {
  std::sort(s.begin(), s.end());
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
  if (it == simplices_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - simplices_.begin());
}

Triangulation parse_triangulation(std::string_view text) {
  std::optional<int> dim;
  std::vector<Simplex> simplices;
  std::map<Simplex, std::size_t> first_line;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto tokens = detail::split_ws(line);
    if (!dim) {
      if (tokens.size() != 2 || tokens[0] != "dim")
        throw ParseError("expected 'dim <n>'", line_no);
      auto n = detail::parse_uint(tokens[1]);
      if (!n || *n < 1 || *n > 64) throw ParseError("invalid dimension '" + std::string(tokens[1]) + "'", line_no);
      dim = static_cast<int>(*n);
      continue;
    }
    Simplex s;
    for (auto tok : tokens) {
      auto v = detail::parse_uint(tok);
      if (!v) throw ParseError("invalid vertex id '" + std::string(tok) + "'", line_no);
      s.push_back(*v);
    }
    if (s.size() != static_cast<std::size_t>(*dim) + 1)
      throw ParseError("simplex has " + std::to_string(s.size()) + " vertices, expected " +
                           std::to_string(*dim + 1),
                       line_no);
    Simplex sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("repeated vertex in simplex", line_no);
    if (auto [it, fresh] = first_line.emplace(sorted, line_no); !fresh)
      throw ParseError("duplicate simplex (first on line " + std::to_string(it->second) + ")", line_no);
    simplices.push_back(std::move(sorted));
  }
  if (!dim) throw ParseError("missing 'dim <n>' header");
  if (simplices.empty()) throw ParseError("no simplices");
  return Triangulation(*dim, std::move(simplices));
}

std::string serialize_triangulation(const Triangulation& t) {
  std::ostringstream out;
  out << "dim " << t.dimension() << '\n';
  for (const auto& s : t.simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

ValidationReport validate(const Triangulation& t) {
  ValidationReport report;
  const auto arity = static_cast<std::size_t>(t.dimension()) + 1;
  for (const auto& s : t.simplices())
    if (s.size() != arity) report.pure = false;

  std::map<Simplex, std::vector<std::size_t>> facet_owners;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& s = t.simplex(i);
    for (std::size_t k = 0; k < s.size(); ++k) facet_owners[without(s, k)].push_back(i);
  }
  for (const auto& [facet, owners] : facet_owners) {
    if (owners.size() != 2) {
      report.closed = false;
      report.bad_facets.emplace_back(facet, owners.size());
    }
  }

  // Components of the facet-adjacency relation, bad facets included.
  std::vector<std::size_t> parent(t.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [facet, owners] : facet_owners)
    for (std::size_t k = 1; k < owners.size(); ++k) parent[root(owners[k])] = root(owners[0]);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < t.size(); ++i) groups[root(i)].push_back(i);
  for (auto& [r, members] : groups) report.components.push_back(std::move(members));
  std::sort(report.components.begin(), report.components.end());
  report.connected = report.components.size() == 1;
  return report;
}

void require_valid(const Triangulation& t) {
  auto report = validate(t);
  if (!report.pure) throw DomainError("triangulation is not pure");
  if (!report.closed) {
    const auto& [facet, count] = report.bad_facets.front();
    throw DomainError("not a closed pseudomanifold: face " + simplex_string(facet) + " lies in " +
                      std::to_string(count) + " simplices");
  }
  if (!report.connected)
    throw DomainError("dual graph has " + std::to_string(report.components.size()) + " components");
}

std::vector<Simplex> FaceCensus::odd_codim2_faces() const {
  std::vector<Simplex> odd;
  for (const auto& [face, degree] : codim2_degree)
    if (degree % 2 == 1) odd.push_back(face);
  return odd;
}

FaceCensus face_census(const Triangulation& t) {
  const int n = t.dimension();
  FaceCensus census;
  census.faces.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    std::set<Simplex> faces;
    for (const auto& s : t.simplices())
      for_each_subset(s, static_cast<std::size_t>(k) + 1, [&](const Simplex& f) { faces.insert(f); });
    census.faces[static_cast<std::size_t>(k)].assign(faces.begin(), faces.end());
  }
  if (n >= 2) {
    for (const auto& s : t.simplices())
      for_each_subset(s, static_cast<std::size_t>(n) - 1,
                      [&](const Simplex& f) { ++census.codim2_degree[f]; });
  }
  return census;
}

std::optional<std::size_t> DualGraph::edge_between(std::size_t u, std::size_t v) const {
  const auto& adj = adjacency.at(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), std::make_pair(v, std::size_t{0}));
  if (it == adj.end() || it->first != v) return std::nullopt;
  return it->second;
}

DualGraph dual_graph(const Triangulation& t) {
  std::map<Simplex, std::vector<std::size_t>> facet_owners;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& s = t.simplex(i);
    for (std::size_t k = 0; k < s.size(); ++k) facet_owners[without(s, k)].push_back(i);
  }
  DualGraph dual;
  dual.adjacency.resize(t.size());
  for (auto& [facet, owners] : facet_owners) {
    if (owners.size() != 2) continue;
    dual.edges.push_back({std::min(owners[0], owners[1]), std::max(owners[0], owners[1]), facet});
  }
  std::sort(dual.edges.begin(), dual.edges.end(),
            [](const DualEdge& x, const DualEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  for (std::size_t e = 0; e < dual.edges.size(); ++e) {
    dual.adjacency[dual.edges[e].a].emplace_back(dual.edges[e].b, e);
    dual.adjacency[dual.edges[e].b].emplace_back(dual.edges[e].a, e);
  }
  for (auto& adj : dual.adjacency) std::sort(adj.begin(), adj.end());
  return dual;
}

VertexId opposite_vertex(const Simplex& s, const Simplex& facet) {
  if (facet.size() + 1 == s.size() && std::includes(s.begin(), s.end(), facet.begin(), facet.end()))
    for (VertexId v : s)
      if (!std::binary_search(facet.begin(), facet.end(), v)) return v;
  throw DomainError("facet " + simplex_string(facet) + " is not a facet of " + simplex_string(s));
}

namespace {

// Sign of the facet opposite `v` in the boundary of sorted simplex `s`.
int facet_sign(const Simplex& s, VertexId v) {
  auto pos = std::lower_bound(s.begin(), s.end(), v) - s.begin();
  return pos % 2 == 0 ? 1 : -1;
}

// BFS two-coloring of the dual graph where edge e demands equal (+1) or
// opposite (-1) labels per relation(e). True iff consistent.
template <typename Relation>
bool consistent_signs(const DualGraph& dual, Relation&& relation) {
  std::vector<int> sign(dual.adjacency.size(), 0);
  for (std::size_t start = 0; start < sign.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto [v, e] : dual.adjacency[u]) {
        int want = sign[u] * relation(e);
        if (sign[v] == 0) {
          sign[v] = want;
          queue.push_back(v);
        } else if (sign[v] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_orientable(const Triangulation& t) {
  auto dual = dual_graph(t);
  // Orientations eps(s) agree across facet F iff eps(a)*sgn_a(F) = -eps(b)*sgn_b(F).
  return consistent_signs(dual, [&](std::size_t e) {
    const auto& edge = dual.edges[e];
    const auto& a = t.simplex(edge.a);
    const auto& b = t.simplex(edge.b);
    return -facet_sign(a, opposite_vertex(a, edge.facet)) * facet_sign(b, opposite_vertex(b, edge.facet));
  });
}

bool is_even_cyclic(const Triangulation& t) {
  return consistent_signs(dual_graph(t), [](std::size_t) { return -1; });
}

long long euler_characteristic(const Triangulation& t) {
  auto census = face_census(t);
  long long chi = 0;
  for (std::size_t k = 0; k < census.faces.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(census.faces[k].size());
  return chi;
}

}  // namespace holocolor
