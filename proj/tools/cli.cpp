#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "holocolor/builders.hpp"
#include "holocolor/circle_layers.hpp"
#include "holocolor/coloring.hpp"
#include "holocolor/defects.hpp"
#include "holocolor/error.hpp"
#include "holocolor/gamma.hpp"
#include "holocolor/gem.hpp"
#include "holocolor/holonomy.hpp"
#include "holocolor/homology.hpp"
#include "holocolor/oracles.hpp"
#include "holocolor/triangulation.hpp"

namespace holocolor::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string example;
  std::uint64_t seed = 0;
  int colors = 0;
  bool quiet = false;
  bool dot = false;
};

struct Outcome {
  Json result;
  int status = kOk;
  Json diagnostics = Json::array();
  std::optional<std::string> raw;

  void fail(int code, const std::string& kind, const std::string& message) {
    status = code;
    diagnostics.push_back({{"severity", "error"}, {"kind", kind}, {"message", message}});
  }
};

// ---- inputs ----------------------------------------------------------------

void require_one_source(const Options& o) {
  if (o.input.empty() == o.example.empty()) throw UsageError("give exactly one input: a file path or --example");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string input_label(const Options& o) {
  if (!o.example.empty()) return "example:" + o.example;
  return o.input;
}

template <typename F>
auto from_example(const std::string& spec, F&& build) {
  try {
    return build();
  } catch (const DomainError& e) {
    throw UsageError(std::string(e.what()) + " (example '" + spec + "')");
  }
}

Triangulation load_triangulation(const Options& o) {
  require_one_source(o);
  if (!o.example.empty()) return from_example(o.example, [&] { return example_by_name(o.example); });
  return parse_triangulation(read_file(o.input));
}

CircleLayers circle_example(const std::string& spec) {
  if (spec == "interleaved") return CircleLayers(4, {{0, 2}, {1, 3}});
  if (spec == "nested") return CircleLayers(4, {{0, 2}, {Rational(1, 2), Rational(3, 2)}});
  if (spec.rfind("circle:", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(spec.substr(7));
    } catch (const std::exception&) {
      throw DomainError("invalid point count");
    }
    if (m < 2 || m > 1000) throw DomainError("point count must lie in 2..1000");
    std::vector<Rational> points;
    for (int i = 0; i < m; ++i) points.emplace_back(i);
    return CircleLayers(Rational(m), {points});
  }
  throw DomainError("unknown circle example; use interleaved, nested or circle:<m>");
}

CircleLayers load_circle(const Options& o) {
  require_one_source(o);
  if (!o.example.empty()) return from_example(o.example, [&] { return circle_example(o.example); });
  return parse_circle_layers(read_file(o.input));
}

LayeredIntersectionData load_intersections(const Options& o) {
  require_one_source(o);
  if (!o.example.empty())
    return from_example(o.example, [&] { return circle_intersections(circle_example(o.example)); });
  return parse_intersection_json(read_file(o.input));
}

Gem gem_example(const std::string& spec) {
  if (spec == "gem2") return two_vertex_gem();
  if (spec == "cross_polytope") {
    auto t = cross_polytope_boundary(3);
    Coloring antipodal;
    for (auto v : t.vertices()) antipodal[v] = static_cast<Color>((v - 1) % 4) + 1;
    return gem_from_coloring(t, antipodal);
  }
  if (spec == "subdivided_simplex") {
    auto [t, f] = barycentric_subdivide(simplex_boundary(3));
    return gem_from_coloring(t, f);
  }
  throw DomainError("unknown gem example; use gem2, cross_polytope or subdivided_simplex");
}

Gem load_gem(const Options& o) {
  require_one_source(o);
  if (!o.example.empty()) return from_example(o.example, [&] { return gem_example(o.example); });
  return parse_gem(read_file(o.input));
}

// ---- JSON pieces -----------------------------------------------------------

Json integer(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Json coloring_json(const std::optional<Coloring>& f) {
  if (!f) return nullptr;
  Json out = Json::object();
  for (auto [v, c] : *f) out[std::to_string(v)] = c;
  return out;
}

Json homology_json(const HomologyProfile& h) {
  Json betti = Json::array(), torsion = Json::array();
  for (const auto& g : h.groups) {
    betti.push_back(g.betti);
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(integer(d));
    torsion.push_back(std::move(t));
  }
  return {{"betti", betti}, {"torsion", torsion}};
}

Json census_json(const Triangulation& t, const FaceCensus& census) {
  Json counts = Json::array();
  for (const auto& faces : census.faces) counts.push_back(faces.size());
  return {{"dimension", t.dimension()}, {"face_counts", counts}, {"odd_faces", census.odd_codim2_faces()}};
}

Json permutation_json(const Permutation& p) {
  return {{"permutation", p.to_cycle_string()}, {"cycle_type", p.cycle_type()}};
}

Json pairs_json(const std::vector<RegionPair>& pairs) {
  Json out = Json::array();
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

Json arcs_json(const CircleLayers& cl, const std::optional<ArcColoring>& f) {
  if (!f) return nullptr;
  Json out = Json::array();
  for (const auto& arc : cl.arcs())
    out.push_back({{"arc", arc.id},
                   {"layer", arc.layer},
                   {"start", format_rational(arc.start)},
                   {"end", format_rational(arc.end)},
                   {"color", (*f)[arc.id]}});
  return out;
}

Json gamma_json(const GammaComplex& g) {
  return {{"n", g.n},
          {"j", g.j},
          {"census", g.census()},
          {"cell_count", g.cells.size()},
          {"vertex_count", g.vertices().size()},
          {"region_cell_count", g.regions().size()}};
}

// ---- triangulation commands ------------------------------------------------

void run_validate(const Options& o, Outcome& out) {
  auto t = load_triangulation(o);
  auto report = validate(t);
  Json bad = Json::array();
  for (const auto& [face, count] : report.bad_facets) bad.push_back({{"face", face}, {"simplices", count}});
  out.result["validation"] = {{"pure", report.pure},
                              {"closed", report.closed},
                              {"connected", report.connected},
                              {"components", report.components.size()},
                              {"bad_faces", bad}};
  try {
    require_valid(t);
  } catch (const DomainError& e) {
    out.fail(kDomainFailure, "domain", e.what());
    return;
  }
  out.result["census"] = census_json(t, face_census(t));
  out.result["euler"] = euler_characteristic(t);
  out.result["orientable"] = is_orientable(t);
  out.result["even_cyclic"] = is_even_cyclic(t);
  out.result["homology"] = homology_json(homology(t));
}

void run_census(const Options& o, Outcome& out) {
  auto t = load_triangulation(o);
  require_valid(t);
  auto census = face_census(t);
  out.result = census_json(t, census);
  Json degrees = Json::array();
  for (const auto& [face, degree] : census.codim2_degree) degrees.push_back({{"face", face}, {"degree", degree}});
  out.result["codim2_degrees"] = degrees;
  out.result["euler"] = euler_characteristic(t);
}

void run_homology(const Options& o, Outcome& out) {
  auto t = load_triangulation(o);
  require_valid(t);
  auto h = homology(t);
  out.result = homology_json(h);
  out.result["euler"] = euler_characteristic(t);
  out.result["betti_alternating_sum"] = h.betti_alternating_sum();
}

void run_holonomy(const Options& o, Outcome& out) {
  auto t = load_triangulation(o);
  require_valid(t);
  auto dual = dual_graph(t);
  auto hol = holonomy_generators(t, dual);
  Json gens = Json::array();
  for (const auto& g : hol.generators) {
    const auto& e = dual.edges[g.edge];
    Json entry = {{"from", t.simplex(e.a)}, {"to", t.simplex(e.b)}, {"facet", e.facet}};
    entry.update(permutation_json(g.permutation));
    gens.push_back(std::move(entry));
  }
  out.result["base"] = t.simplex(hol.base);
  out.result["generator_count"] = hol.generators.size();
  out.result["generators"] = gens;
  out.result["trivial"] = hol.trivial();
  out.result["even_sided"] = is_locally_colorable(t).locally_colorable;
  if (t.dimension() + 1 <= kClosureDegreeBudget)
    out.result["image_order"] = holonomy_invariants(t, hol).image_order;
  else
    out.result["image_order"] = nullptr;
}

void run_color(const Options& o, Outcome& out) {
  auto t = load_triangulation(o);
  require_valid(t);
  const int colors = o.colors ? o.colors : t.dimension() + 1;
  std::optional<Coloring> f;
  out.result["colors"] = colors;
  if (colors == t.dimension() + 1) {
    auto hol = holonomy_generators(t);
    f = is_colorable(t, hol);
    out.result["method"] = "holonomy";
    out.result["colorable"] = f.has_value();
    out.result["holonomy_nontrivial"] = !hol.trivial();
  } else {
    f = brute_force_colorable(t, colors);
    out.result["method"] = "brute_force";
    out.result["colorable"] = f.has_value();
  }
  out.result["coloring"] = coloring_json(f);
  if (!f) out.fail(kDomainFailure, "domain", "no proper " + std::to_string(colors) + "-coloring");
}

void run_localcheck(const Options& o, Outcome& out) {
  auto t = load_triangulation(o);
  require_valid(t);
  auto local = is_locally_colorable(t);
  out.result["locally_colorable"] = local.locally_colorable;
  out.result["odd_faces"] = local.odd_faces;
  out.result["orientable"] = is_orientable(t);
  out.result["even_cyclic"] = is_even_cyclic(t);
}

void run_defects(const Options& o, Outcome& out) {
  auto t = load_triangulation(o);
  auto d = defect_graphs(t);
  Json degrees = Json::object();
  for (auto [v, k] : d.odd_degree()) degrees[std::to_string(v)] = k;
  out.result["defect_regions"] = d.defect_regions;
  out.result["odd_edges"] = pairs_json(d.odd_edges);
  out.result["adjacency_edges"] = pairs_json(d.adjacency_edges);
  out.result["odd_degrees"] = degrees;
  out.result["odd_degrees_even"] = d.odd_degrees_even();
  out.result["defects_have_degree_two"] = d.defects_have_degree_two();
  out.result["adjacency_triangle_free"] = d.adjacency_triangle_free();
  out.result["coloring"] = coloring_json(defect_free_coloring(t));
}

bool is_suite(const std::string& name) {
  for (auto s : kOracleSuites)
    if (name == s) return true;
  return false;
}

void run_oracle(const Options& o, Outcome& out) {
  if (o.example.empty() && is_suite(o.input)) {
    auto report = run_oracles(o.input, o.seed);
    Json props = Json::array();
    for (const auto& p : report.properties) {
      Json entry = {{"name", p.name}, {"passed", p.passed}, {"cases", p.cases}};
      if (!p.passed) entry["counterexample"] = p.counterexample;
      props.push_back(std::move(entry));
    }
    out.result = {{"suite", report.suite}, {"seed", report.seed}, {"passed", report.passed()}, {"properties", props}};
    if (!report.passed()) out.fail(kDomainFailure, "oracle", "property failures in suite " + report.suite);
    return;
  }
  auto t = load_triangulation(o);
  require_valid(t);
  const int colors = o.colors ? o.colors : t.dimension() + 1;
  auto f = brute_force_colorable(t, colors);
  out.result["colors"] = colors;
  out.result["colorable"] = f.has_value();
  out.result["coloring"] = coloring_json(f);
  if (colors == t.dimension() + 1) {
    const bool agrees = is_colorable(t).has_value() == f.has_value();
    out.result["holonomy_agrees"] = agrees;
    if (!agrees) out.fail(kDomainFailure, "oracle", "holonomy and brute force disagree");
  } else {
    out.result["holonomy_agrees"] = nullptr;
  }
  if (!f) out.fail(kDomainFailure, "domain", "no proper " + std::to_string(colors) + "-coloring");
}

void run_subdivide(const Options& o, Outcome& out) {
  auto t = load_triangulation(o);
  require_valid(t);
  auto [sd, f] = barycentric_subdivide(t);
  out.result["dimension"] = sd.dimension();
  out.result["vertex_count"] = sd.vertices().size();
  out.result["simplex_count"] = sd.size();
  out.result["simplices"] = sd.simplices();
  out.result["coloring"] = coloring_json(f);
}

// ---- circle, gamma, gem ----------------------------------------------------

void run_circle_holonomy(const Options& o, Outcome& out) {
  auto cl = load_circle(o);
  auto hol = circle_holonomy(cl);
  Json crossings = Json::array();
  for (const auto& e : sweep_events(cl)) crossings.push_back({{"position", format_rational(e.position)}, {"layer", e.layer}});
  out.result["layers"] = cl.layer_count();
  out.result["circumference"] = format_rational(cl.circumference());
  out.result["arc_count"] = cl.arc_count();
  out.result["holonomy"] = hol.to_cycle_string();
  out.result["cycle_type"] = hol.cycle_type();
  out.result["trivial"] = hol.is_identity();
  out.result["crossings"] = crossings;
}

void run_circle_color(const Options& o, Outcome& out) {
  auto cl = load_circle(o);
  auto f = circle_colorable(cl);
  out.result["colors"] = cl.layer_count() + 1;
  out.result["holonomy"] = circle_holonomy(cl).to_cycle_string();
  out.result["colorable"] = f.has_value();
  out.result["coloring"] = arcs_json(cl, f);
  if (!f) out.fail(kDomainFailure, "domain", "no proper " + std::to_string(cl.layer_count() + 1) + "-coloring");
}

void run_circle_gamma(const Options& o, Outcome& out) {
  auto cl = load_circle(o);
  auto f = circle_colorable(cl);
  out.result["holonomy"] = circle_holonomy(cl).to_cycle_string();
  out.result["colorable"] = f.has_value();
  out.result["coloring"] = arcs_json(cl, f);
  out.result["gamma"] = gamma_json(gamma_complex(circle_intersections(cl)));
}

void run_gamma(const Options& o, Outcome& out) {
  auto d = load_intersections(o);
  auto g = gamma_complex(d);
  out.result = gamma_json(g);
  Json cells = Json::array();
  for (const auto& c : g.cells) cells.push_back({{"regions", c.regions}, {"layers", c.layers}, {"dimension", c.dimension}});
  out.result["cells"] = cells;
}

void run_gem_report(const Options& o, Outcome& out) {
  auto g = load_gem(o);
  if (o.dot) {
    out.raw = export_dot(g);
    return;
  }
  auto r = gem_report(g);
  Json cycles = Json::array();
  for (const auto& [pair, lengths] : r.bicolored_cycles)
    cycles.push_back({{"colors", {pair.first, pair.second}}, {"lengths", lengths}});
  Json triples = Json::array();
  for (const auto& t : r.triples)
    triples.push_back({{"missing_color", t.missing_color},
                       {"component_sizes", t.component_sizes},
                       {"component_planar", t.component_planar}});
  out.result = {{"vertex_count", r.vertex_count},
                {"edge_count", r.edge_count},
                {"bicolored_cycles", cycles},
                {"triples", triples},
                {"cycle_count", r.cycle_count},
                {"region_count", r.region_count},
                {"euler", r.euler},
                {"all_even", r.all_even},
                {"all_planar", r.all_planar}};
}

void run_gem_dot(const Options& o, Outcome& out) { out.raw = export_dot(load_gem(o)); }

using Handler = void (*)(const Options&, Outcome&);

struct Command {
  const char* name;
  const char* group;  ///< nullptr for top-level commands
  const char* help;
  Handler run;
};

constexpr Command kCommands[] = {
    {"validate", nullptr, "validation, census, Euler characteristic, orientability, homology", run_validate},
    {"census", nullptr, "face counts and codimension-2 degrees", run_census},
    {"homology", nullptr, "integer homology", run_homology},
    {"holonomy", nullptr, "holonomy generators of the dual graph", run_holonomy},
    {"color", nullptr, "forced (n+1)-coloring, or brute force with --colors", run_color},
    {"localcheck", nullptr, "local colorability (even-sidedness)", run_localcheck},
    {"defects", nullptr, "defect graphs of a 3-complex", run_defects},
    {"oracle", nullptr, "oracle suite (loc123|circle|gamma|gem) or brute-force coloring", run_oracle},
    {"subdivide", nullptr, "barycentric subdivision with its dimension coloring", run_subdivide},
    {"holonomy", "circle", "sweep holonomy of circle layers", run_circle_holonomy},
    {"color", "circle", "multilayer coloring of circle layers", run_circle_color},
    {"gamma", "circle", "product complex of circle layers", run_circle_gamma},
    {"gamma", nullptr, "product complex of intersection data", run_gamma},
    {"report", "gem", "gem census", run_gem_report},
    {"dot", "gem", "Graphviz export", run_gem_dot},
};

Json document(const Options& o, const std::string& command, const Outcome& out) {
  return {{"tool", kToolName},
          {"version", kVersion},
          {"input", input_label(o)},
          {"subcommand", command},
          {"result", out.result},
          {"diagnostics", out.diagnostics}};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& stream) {
  Options o;
  Outcome out;
  std::string command;
  const Command* chosen = nullptr;

  CLI::App app{"Colorings of complexes dual to triangulations", kToolName};
  app.require_subcommand(1);
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const Command*>> leaves;
  for (const auto& c : kCommands) {
    CLI::App* parent = &app;
    if (c.group) {
      auto [it, fresh] = groups.emplace(c.group, nullptr);
      if (fresh) {
        it->second = app.add_subcommand(c.group, std::string(c.group) + " commands");
        it->second->require_subcommand(1);
      }
      parent = it->second;
    }
    auto* sub = parent->add_subcommand(c.name, c.help);
    sub->add_option("input", o.input, "input file (or oracle suite name)");
    sub->add_option("--example", o.example, "built-in example, name:params");
    sub->add_option("--seed", o.seed, "seed for random instances");
    sub->add_option("--colors", o.colors, "color count")->check(CLI::Range(1, 64));
    sub->add_flag("--quiet", o.quiet, "print only the result");
    sub->add_flag("--dot", o.dot, "emit Graphviz DOT (gem commands)");
    leaves.emplace_back(sub, &c);
  }

  try {
    if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
      bool known = groups.count(args[0]) > 0;
      for (const auto& c : kCommands) known = known || (!c.group && args[0] == c.name);
      if (!known) throw UsageError("unknown subcommand '" + args[0] + "'");
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (auto [sub, c] : leaves)
      if (sub->parsed()) chosen = c;
    command = chosen->group ? std::string(chosen->group) + " " + chosen->name : chosen->name;
    if (o.dot && std::string_view(chosen->group ? chosen->group : "") != "gem")
      throw UsageError("--dot applies to gem commands only");
    chosen->run(o, out);
  } catch (const CLI::CallForHelp&) {
    out.result = {{"usage", app.help()}};
  } catch (const CLI::ParseError& e) {
    out.fail(kUsageFailure, "usage", e.what());
  } catch (const UsageError& e) {
    out.fail(kUsageFailure, "usage", e.what());
  } catch (const InputError& e) {
    out.fail(kUsageFailure, "io", e.what());
  } catch (const ParseError& e) {
    out.fail(kUsageFailure, "parse", e.what());
    if (e.line()) out.diagnostics.back()["line"] = e.line();
  } catch (const BudgetExceeded& e) {
    out.fail(kDomainFailure, "budget", e.what());
  } catch (const Error& e) {
    out.fail(kDomainFailure, "domain", e.what());
  }

  if (out.raw && out.status == kOk) {
    stream << *out.raw;
    return out.status;
  }
  if (o.quiet)
    stream << out.result.dump(2) << '\n';
  else
    stream << document(o, command, out).dump(2) << '\n';
  return out.status;
}

}  // namespace holocolor::cli
