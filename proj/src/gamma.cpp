#include "holocolor/gamma.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "holocolor/error.hpp"

namespace holocolor {

namespace {

std::string set_string(const RegionSet& q) {
  std::string out = "{";
  for (std::size_t i = 0; i < q.size(); ++i) out += (i ? " " : "") + std::to_string(q[i]);
  return out + "}";
}

RegionSet minus(const RegionSet& q, std::size_t skip) {
  RegionSet out;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (i != skip) out.push_back(q[i]);
  return out;
}

}  // namespace

int LayeredIntersectionData::layer_of(RegionId r) const {
  auto it = std::lower_bound(regions.begin(), regions.end(), r,
                             [](const LayeredRegion& x, RegionId id) { return x.id < id; });
  if (it == regions.end() || it->id != r) throw DomainError("unknown region " + std::to_string(r));
  return it->layer;
}

std::vector<int> LayeredIntersectionData::layers_of(const RegionSet& q) const {
  std::set<int> layers;
  for (RegionId r : q) layers.insert(layer_of(r));
  return {layers.begin(), layers.end()};
}

std::string LayeredIntersectionData::check() const {
  if (n < 1 || j < 1) return "n and j must be positive";
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (i > 0 && regions[i - 1].id >= regions[i].id) return "region ids must be distinct";
    if (regions[i].layer < 1 || regions[i].layer > j)
      return "region " + std::to_string(regions[i].id) + " has layer outside 1.." + std::to_string(j);
  }
  for (const auto& r : regions) {
    auto it = intersections.find({r.id});
    if (it == intersections.end()) return "singleton {" + std::to_string(r.id) + "} is missing";
    if (it->second != n) return "singleton {" + std::to_string(r.id) + "} must have dimension n";
  }
  for (const auto& [q, dim] : intersections) {
    if (q.empty()) return "empty region set";
    if (!std::is_sorted(q.begin(), q.end()) || std::adjacent_find(q.begin(), q.end()) != q.end())
      return "region set " + set_string(q) + " is not a sorted set";
    for (RegionId r : q) {
      auto it = std::lower_bound(regions.begin(), regions.end(), r,
                                 [](const LayeredRegion& x, RegionId id) { return x.id < id; });
      if (it == regions.end() || it->id != r) return "region set " + set_string(q) + " names unknown region";
    }
    if (dim < 0 || dim > n) return "region set " + set_string(q) + " has dimension outside 0..n";
    if (q.size() >= 2)
      for (std::size_t i = 0; i < q.size(); ++i) {
        auto sub = intersections.find(minus(q, i));
        if (sub == intersections.end()) return "subset " + set_string(minus(q, i)) + " of " + set_string(q) + " is missing";
        if (sub->second < dim) return "subset " + set_string(sub->first) + " has lower dimension than " + set_string(q);
      }
    if (layers_of(q).size() < q.size() && dim >= n)
      return "regions of one layer in " + set_string(q) + " meet in full dimension";
  }
  return {};
}

LayeredIntersectionData parse_intersection_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  LayeredIntersectionData d;
  try {
    d.n = doc.at("n").get<int>();
    d.j = doc.at("j").get<int>();
    for (const auto& r : doc.at("regions")) d.regions.push_back({r.at("id").get<RegionId>(), r.at("layer").get<int>()});
    std::sort(d.regions.begin(), d.regions.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& q : doc.at("intersections")) {
      auto ids = q.at("regions").get<RegionSet>();
      std::sort(ids.begin(), ids.end());
      if (!d.intersections.emplace(ids, q.at("dim").get<int>()).second)
        throw ParseError("region set " + set_string(ids) + " listed twice");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed intersection data: ") + e.what());
  }
  if (auto problem = d.check(); !problem.empty()) throw DomainError(problem);
  return d;
}

std::string serialize_intersection_json(const LayeredIntersectionData& d) {
  nlohmann::ordered_json doc;
  doc["n"] = d.n;
  doc["j"] = d.j;
  doc["regions"] = nlohmann::ordered_json::array();
  for (const auto& r : d.regions) doc["regions"].push_back({{"id", r.id}, {"layer", r.layer}});
  doc["intersections"] = nlohmann::ordered_json::array();
  for (const auto& [q, dim] : d.intersections) doc["intersections"].push_back({{"regions", q}, {"dim", dim}});
  return doc.dump(2) + "\n";
}

LayeredIntersectionData circle_intersections(const CircleLayers& cl) {
  LayeredIntersectionData d;
  d.n = 1;
  d.j = cl.layer_count();
  const auto arcs = cl.arcs();
  const Rational& c = cl.circumference();
  for (const auto& a : arcs) d.regions.push_back({a.id, a.layer});

  auto covers = [&](const Arc& a, const Rational& x) {
    return (a.start <= x && x <= a.end) || (a.start <= x + c && x + c <= a.end);
  };
  // Atoms: each boundary point (dimension 0) and each open gap between
  // consecutive points, represented by its midpoint (dimension 1).
  std::vector<Rational> points;
  for (const auto& layer : cl.layers()) points.insert(points.end(), layer.begin(), layer.end());
  std::sort(points.begin(), points.end());
  std::vector<std::pair<Rational, int>> atoms;
  for (std::size_t i = 0; i < points.size(); ++i) {
    atoms.emplace_back(points[i], 0);
    Rational next = i + 1 < points.size() ? points[i + 1] : Rational(points.front() + c);
    Rational mid = (points[i] + next) / 2;
    if (mid >= c) mid -= c;
    atoms.emplace_back(mid, 1);
  }

  for (const auto& [x, dim] : atoms) {
    RegionSet cover;
    for (const auto& a : arcs)
      if (covers(a, x)) cover.push_back(a.id);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cover.size()); ++mask) {
      RegionSet q;
      for (std::size_t b = 0; b < cover.size(); ++b)
        if (mask >> b & 1) q.push_back(cover[b]);
      auto [it, fresh] = d.intersections.emplace(q, dim);
      if (!fresh) it->second = std::max(it->second, dim);
    }
  }
  return d;
}

std::vector<std::size_t> GammaComplex::facets_of(std::size_t cell) const {
  const auto& q = cells.at(cell).regions;
  std::vector<std::size_t> out;
  for (const auto& [key, idx] : index) {
    if (key.size() != q.size() + 1) continue;
    if (std::includes(key.begin(), key.end(), q.begin(), q.end())) out.push_back(idx);
  }
  return out;
}

std::vector<std::size_t> GammaComplex::cofacets_of(std::size_t cell) const {
  const auto& q = cells.at(cell).regions;
  std::vector<std::size_t> out;
  if (q.size() < 2) return out;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (auto it = index.find(minus(q, i)); it != index.end()) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> GammaComplex::census() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(n + j), 0);
  for (const auto& c : cells) ++counts.at(static_cast<std::size_t>(c.dimension));
  return counts;
}

std::vector<std::size_t> GammaComplex::vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dimension == 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> GammaComplex::regions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].regions.size() == 1) out.push_back(i);
  return out;
}

GammaComplex gamma_complex(const LayeredIntersectionData& d) {
  if (auto problem = d.check(); !problem.empty()) throw DomainError(problem);
  GammaComplex g;
  g.n = d.n;
  g.j = d.j;
  const auto top = static_cast<std::size_t>(d.n + d.j);
  for (const auto& [q, tag] : d.intersections) {
    if (q.size() > top)
      throw DomainError("region set " + set_string(q) + " has more than n + j = " + std::to_string(top) + " regions");
    auto layers = d.layers_of(q);
    // Transversality: each extra region of a layer cuts one dimension.
    const int expected = d.n + static_cast<int>(layers.size()) - static_cast<int>(q.size());
    if (tag != expected)
      throw DomainError("dimension law violated by " + set_string(q) + ": tagged " + std::to_string(tag) +
                        ", expected " + std::to_string(expected));
    g.index.emplace(q, g.cells.size());
    g.cells.push_back({q, std::move(layers), static_cast<int>(top - q.size())});
  }
  for (std::size_t v : g.vertices()) {
    auto edges = g.cofacets_of(v);
    if (edges.size() != top)
      throw DomainError("vertex " + set_string(g.cells[v].regions) + " has " + std::to_string(edges.size()) +
                        " incident edges, expected " + std::to_string(top));
  }
  return g;
}

TransferResult gamma_coloring_transfer(const LayeredIntersectionData& d, const GammaComplex& gamma,
                                       const std::map<RegionId, Color>& f) {
  for (const auto& r : d.regions)
    if (!f.contains(r.id)) throw DomainError("coloring misses region " + std::to_string(r.id));

  TransferResult result{true, true};
  for (const auto& [q, dim] : d.intersections)
    if (q.size() == 2 && f.at(q[0]) == f.at(q[1])) result.proper_on_data = false;

  // Two region cells meet iff some cell lies in both closures, i.e. some cell
  // is indexed by a superset of both singletons.
  std::map<RegionId, std::size_t> cell_of;
  for (std::size_t c : gamma.regions()) cell_of.emplace(gamma.cells[c].regions.front(), c);
  std::set<std::pair<std::size_t, std::size_t>> touching;
  for (const auto& cell : gamma.cells)
    for (std::size_t x = 0; x < cell.regions.size(); ++x)
      for (std::size_t y = x + 1; y < cell.regions.size(); ++y)
        touching.emplace(cell_of.at(cell.regions[x]), cell_of.at(cell.regions[y]));
  for (auto [a, b] : touching)
    if (f.at(gamma.cells[a].regions.front()) == f.at(gamma.cells[b].regions.front())) result.proper_on_gamma = false;
  return result;
}

}  // namespace holocolor
