#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using holocolor::cli::dispatch;
using Json = nlohmann::json;

namespace {

struct Run {
  int status;
  std::string text;
  Json doc() const { return Json::parse(text); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  int status = dispatch(args, out);
  return {status, out.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("holocolor_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, ValidateExample) {
  auto r = run({"validate", "--example", "simplex_boundary:3"});
  EXPECT_EQ(r.status, 0);
  auto d = r.doc();
  EXPECT_EQ(d["tool"], "holocolor");
  EXPECT_EQ(d["subcommand"], "validate");
  EXPECT_EQ(d["input"], "example:simplex_boundary:3");
  EXPECT_TRUE(d["diagnostics"].empty());
  const auto& v = d["result"]["validation"];
  EXPECT_TRUE(v["pure"] && v["closed"] && v["connected"]);
  EXPECT_EQ(d["result"]["homology"]["betti"], Json::parse("[1,0,0,1]"));
  EXPECT_EQ(d["result"]["euler"], 0);
}

TEST(Cli, ColorTorusFails) {
  auto r = run({"color", "--example", "torus7"});
  EXPECT_EQ(r.status, 1);
  auto d = r.doc();
  EXPECT_EQ(d["result"]["colorable"], false);
  EXPECT_EQ(d["result"]["holonomy_nontrivial"], true);
  EXPECT_FALSE(d["diagnostics"].empty());
}

TEST(Cli, ColorOctahedron) {
  auto r = run({"color", "--example", "cross_polytope_boundary:2"});
  EXPECT_EQ(r.status, 0);
  auto f = r.doc()["result"]["coloring"];
  EXPECT_EQ(f["1"], f["4"]);
  auto brute = run({"color", "--example", "torus7", "--colors", "7"});
  EXPECT_EQ(brute.status, 0);
  EXPECT_EQ(brute.doc()["result"]["method"], "brute_force");
}

TEST(Cli, MissingFileAndUnknownCommand) {
  EXPECT_EQ(run({"gem", "report", "nosuchfile.gem"}).status, 2);
  auto r = run({"frobnicate"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.doc()["diagnostics"][0]["message"].get<std::string>().find("frobnicate"), std::string::npos);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"circle"}).status, 2);
  EXPECT_EQ(run({"circle", "spin", "--example", "nested"}).status, 2);
}

TEST(Cli, InputSourceRules) {
  auto path = write_temp("oct.tri", "dim 2\n1 2 3\n1 3 5\n1 5 6\n1 2 6\n4 2 3\n4 3 5\n4 5 6\n4 2 6\n");
  EXPECT_EQ(run({"validate", path}).status, 0);
  EXPECT_EQ(run({"validate", path, "--example", "torus7"}).status, 2);
  EXPECT_EQ(run({"validate"}).status, 2);
  EXPECT_EQ(run({"validate", "--example", "nosuch"}).status, 2);
  EXPECT_EQ(run({"validate", "--example", "circle:1"}).status, 2);
}

TEST(Cli, ParseErrorsCarryLine) {
  auto path = write_temp("bad.tri", "dim 2\n1 2 3\n1 2\n");
  auto r = run({"census", path});
  EXPECT_EQ(r.status, 2);
  auto diag = r.doc()["diagnostics"][0];
  EXPECT_EQ(diag["kind"], "parse");
  EXPECT_EQ(diag["line"], 3);
}

TEST(Cli, InvalidComplexIsDomainFailure) {
  auto path = write_temp("open.tri", "dim 2\n1 2 3\n1 2 4\n1 3 4\n");
  auto r = run({"validate", path});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.doc()["result"]["validation"]["closed"], false);
  EXPECT_FALSE(r.doc()["result"]["validation"]["bad_faces"].empty());
  EXPECT_EQ(run({"holonomy", path}).status, 1);
  EXPECT_EQ(run({"defects", "--example", "torus7"}).status, 1);
}

TEST(Cli, TriangulationSubcommands) {
  for (const char* cmd : {"census", "homology", "holonomy", "localcheck", "subdivide"}) {
    auto r = run({cmd, "--example", "rp2_6"});
    EXPECT_EQ(r.status, 0) << cmd;
    EXPECT_EQ(r.doc()["subcommand"], cmd);
  }
  EXPECT_EQ(run({"homology", "--example", "rp2_6"}).doc()["result"]["torsion"][1], Json::parse("[2]"));
  auto hol = run({"holonomy", "--example", "cross_polytope_boundary:2"}).doc()["result"];
  EXPECT_EQ(hol["trivial"], true);
  EXPECT_EQ(hol["image_order"], 1);
  for (const auto& g : hol["generators"]) EXPECT_EQ(g["permutation"], "()");
  auto defects = run({"defects", "--example", "simplex_boundary:3"});
  EXPECT_EQ(defects.status, 0);
  EXPECT_EQ(defects.doc()["result"]["odd_edges"].size(), 10u);
  EXPECT_TRUE(defects.doc()["result"]["coloring"].is_null());
  auto sd = run({"subdivide", "--example", "simplex_boundary:2"}).doc()["result"];
  EXPECT_EQ(sd["simplex_count"], 24);
}

TEST(Cli, OracleModes) {
  auto brute = run({"oracle", "--example", "cross_polytope_boundary:2"});
  EXPECT_EQ(brute.status, 0);
  EXPECT_EQ(brute.doc()["result"]["holonomy_agrees"], true);
  EXPECT_EQ(run({"oracle", "--example", "simplex_boundary:2"}).status, 1);
  EXPECT_EQ(run({"oracle", "--example", "simplex_boundary:2", "--colors", "4"}).status, 0);
  auto suite = run({"oracle", "circle", "--seed", "3"});
  EXPECT_EQ(suite.status, 0);
  EXPECT_EQ(suite.doc()["result"]["seed"], 3);
  EXPECT_EQ(suite.doc()["result"]["passed"], true);
  EXPECT_EQ(run({"oracle", "circle", "--seed", "x"}).status, 2);
  EXPECT_EQ(run({"color", "--example", "torus7", "--colors", "0"}).status, 2);
}

TEST(Cli, CircleAndGamma) {
  auto hol = run({"circle", "holonomy", "--example", "interleaved"});
  EXPECT_EQ(hol.status, 0);
  EXPECT_EQ(hol.doc()["subcommand"], "circle holonomy");
  EXPECT_EQ(hol.doc()["result"]["cycle_type"], Json::parse("[3]"));
  EXPECT_EQ(run({"circle", "color", "--example", "interleaved"}).status, 1);
  auto nested = run({"circle", "color", "--example", "nested"});
  EXPECT_EQ(nested.status, 0);
  EXPECT_EQ(nested.doc()["result"]["coloring"].size(), 4u);
  EXPECT_EQ(run({"circle", "color", "--example", "circle:7"}).status, 1);
  EXPECT_EQ(run({"circle", "color", "--example", "circle:8"}).status, 0);
  auto g = run({"circle", "gamma", "--example", "interleaved"});
  EXPECT_EQ(g.status, 0);
  EXPECT_EQ(g.doc()["result"]["gamma"]["census"], Json::parse("[4,6,4]"));

  auto path = write_temp("nested.circle", "circle 2\nC=4\nlayer: 0 2\nlayer: 1/2 3/2\n");
  EXPECT_EQ(run({"circle", "holonomy", path}).doc()["result"]["holonomy"], "()");
  auto bad = write_temp("bad.circle", "circle 2\nC=4\nlayer: 0 2\n");
  EXPECT_EQ(run({"circle", "holonomy", bad}).status, 2);

  auto json = write_temp("data.json", R"({"n":1,"j":1,"regions":[{"id":0,"layer":1},{"id":1,"layer":1}],
    "intersections":[{"regions":[0],"dim":1},{"regions":[1],"dim":1},{"regions":[0,1],"dim":0}]})");
  auto gamma = run({"gamma", json});
  EXPECT_EQ(gamma.status, 0);
  EXPECT_EQ(gamma.doc()["result"]["census"], Json::parse("[1,2]"));
  auto broken = write_temp("broken.json", R"({"n":1,"j":1,"regions":[{"id":0,"layer":1}],"intersections":[]})");
  EXPECT_EQ(run({"gamma", broken}).status, 1);
  EXPECT_EQ(run({"gamma", write_temp("junk.json", "{")}).status, 2);
}

TEST(Cli, GemReportAndDot) {
  auto r = run({"gem", "report", "--example", "cross_polytope"});
  EXPECT_EQ(r.status, 0);
  auto res = r.doc()["result"];
  EXPECT_EQ(res["vertex_count"], 16);
  EXPECT_EQ(res["cycle_count"], 24);
  EXPECT_EQ(res["region_count"], 8);
  EXPECT_EQ(res["euler"], 0);
  auto dot = run({"gem", "dot", "--example", "gem2"});
  EXPECT_EQ(dot.status, 0);
  EXPECT_NE(dot.text.find("graph gem {"), std::string::npos);
  EXPECT_EQ(run({"gem", "report", "--dot", "--example", "gem2"}).text, dot.text);
  EXPECT_EQ(run({"validate", "--dot", "--example", "torus7"}).status, 2);
  auto path = write_temp("bad.gem", "gem 3\n0 1 1\n");
  EXPECT_EQ(run({"gem", "report", path}).status, 1);
}

TEST(Cli, QuietPrintsResultOnly) {
  auto r = run({"homology", "--example", "torus7", "--quiet"});
  EXPECT_EQ(r.status, 0);
  auto d = r.doc();
  EXPECT_FALSE(d.contains("tool"));
  EXPECT_EQ(d["betti"], Json::parse("[1,2,1]"));
}

TEST(Cli, HelpExitsCleanly) {
  auto r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.doc()["result"].contains("usage"));
}

TEST(Cli, ReportsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"validate", "--example", "torus7"},
      {"holonomy", "--example", "rp2_6"},
      {"color", "--example", "cross_polytope_boundary:3"},
      {"oracle", "gamma", "--seed", "12"},
      {"oracle", "loc123", "--seed", "4"},
      {"circle", "gamma", "--example", "nested"},
      {"gem", "report", "--example", "subdivided_simplex"},
      {"gem", "dot", "--example", "cross_polytope"},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.text, b.text) << c[0];
  }
}
