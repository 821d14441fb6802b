#include "holocolor/builders.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "holocolor/error.hpp"
#include "text_util.hpp"

namespace holocolor {

Triangulation simplex_boundary(int n) {
  if (n < 1) throw DomainError("simplex_boundary needs n >= 1");
  std::vector<Simplex> simplices;
  const auto count = static_cast<VertexId>(n) + 2;
  for (VertexId skip = 1; skip <= count; ++skip) {
    Simplex s;
    for (VertexId v = 1; v <= count; ++v)
      if (v != skip) s.push_back(v);
    simplices.push_back(std::move(s));
  }
  return Triangulation(n, std::move(simplices));
}

Triangulation cross_polytope_boundary(int n) {
  if (n < 1) throw DomainError("cross_polytope_boundary needs n >= 1");
  if (n > 20) throw DomainError("cross_polytope_boundary is limited to n <= 20");
  const auto pairs = static_cast<VertexId>(n) + 1;
  std::vector<Simplex> simplices;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Simplex s;
    for (VertexId k = 0; k < pairs; ++k) s.push_back((mask >> k) & 1 ? k + 1 + pairs : k + 1);
    simplices.push_back(std::move(s));
  }
  return Triangulation(n, std::move(simplices));
}

Triangulation circle(int m) {
  if (m < 3) throw DomainError("circle needs m >= 3");
  std::vector<Simplex> arcs;
  for (int i = 1; i <= m; ++i)
    arcs.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i % m + 1)});
  return Triangulation(1, std::move(arcs));
}

Triangulation torus7() {
  std::vector<Simplex> simplices;
  for (VertexId i = 0; i < 7; ++i) {
    simplices.push_back({i, (i + 1) % 7, (i + 3) % 7});
    simplices.push_back({(i + 1) % 7, (i + 3) % 7, (i + 4) % 7});
  }
  return Triangulation(2, std::move(simplices));
}

Triangulation rp2_6() {
  return Triangulation(2, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                           {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

Triangulation example(std::string_view name, const std::vector<int>& params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw DomainError("example '" + std::string(name) + "' takes " + std::to_string(count) +
                        " parameter(s), got " + std::to_string(params.size()));
  };
  if (name == "simplex_boundary") {
    want(1);
    return simplex_boundary(params[0]);
  }
  if (name == "cross_polytope_boundary") {
    want(1);
    return cross_polytope_boundary(params[0]);
  }
  if (name == "circle") {
    want(1);
    return circle(params[0]);
  }
  if (name == "torus7") {
    want(0);
    return torus7();
  }
  if (name == "rp2_6") {
    want(0);
    return rp2_6();
  }
  throw DomainError("unknown example '" + std::string(name) + "'");
}

Triangulation example_by_name(std::string_view name) {
  auto colon = name.find(':');
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = name.substr(colon + 1);
    while (true) {
      auto comma = rest.find(',');
      auto tok = rest.substr(0, comma);
      auto v = detail::parse_uint(tok);
      if (!v || *v > 1000) throw DomainError("invalid example parameter '" + std::string(tok) + "'");
      params.push_back(static_cast<int>(*v));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return example(name.substr(0, colon), params);
}

std::pair<Triangulation, Coloring> barycentric_subdivide(const Triangulation& t) {
  const auto census = face_census(t);
  std::map<Simplex, VertexId> face_id;
  Coloring coloring;
  VertexId next = 1;
  for (std::size_t k = 0; k < census.faces.size(); ++k)
    for (const auto& f : census.faces[k]) {
      face_id.emplace(f, next);
      coloring.emplace(next, static_cast<Color>(k) + 1);
      ++next;
    }

  std::vector<Simplex> chains;
  for (const auto& s : t.simplices()) {
    Simplex order = s;
    do {
      Simplex chain, prefix;
      for (VertexId v : order) {
        prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(face_id.at(prefix));
      }
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return {Triangulation(t.dimension(), std::move(chains)), std::move(coloring)};
}

Triangulation stellar_subdivide(const Triangulation& t, const Simplex& face, VertexId apex) {
  Simplex f = face;
  std::sort(f.begin(), f.end());
  if (f.size() < 2) throw DomainError("stellar subdivision needs a face of dimension >= 1");
  if (std::binary_search(t.vertices().begin(), t.vertices().end(), apex))
    throw DomainError("apex " + std::to_string(apex) + " is already a vertex");
  std::vector<Simplex> out;
  bool touched = false;
  for (const auto& s : t.simplices()) {
    if (!std::includes(s.begin(), s.end(), f.begin(), f.end())) {
      out.push_back(s);
      continue;
    }
    touched = true;
    for (VertexId drop : f) {
      Simplex piece;
      for (VertexId v : s)
        if (v != drop) piece.push_back(v);
      piece.push_back(apex);
      out.push_back(std::move(piece));
    }
  }
  if (!touched) throw DomainError("face is not in the triangulation");
  return Triangulation(t.dimension(), std::move(out));
}

Triangulation relabel_affine(const Triangulation& t, VertexId scale, VertexId shift) {
  if (scale == 0) throw DomainError("relabel scale must be positive");
  std::vector<Simplex> out;
  for (const auto& s : t.simplices()) {
    Simplex r;
    for (VertexId v : s) r.push_back(scale * v + shift);
    out.push_back(std::move(r));
  }
  return Triangulation(t.dimension(), std::move(out));
}

}  // namespace holocolor
