#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cayley/cayley.hpp"

using namespace cayley;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("groups list prints the whole catalog") {
  CliRun r = run({"groups", "list"});
  REQUIRE(r.code == 0);
  REQUIRE(r.err.empty());
  REQUIRE(r.out.find("cyclic:8\n") != std::string::npos);
  REQUIRE(r.out.find("abelian:2,2\n") != std::string::npos);
  REQUIRE(r.out.find("dihedral:16\n") != std::string::npos);
  REQUIRE(r.out.find("dicyclic:8\n") != std::string::npos);
  REQUIRE(r.out.find("abelian:2,2,2\n") != std::string::npos);
  size_t lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  REQUIRE(lines == catalog().size());
}

TEST_CASE("bounds subcommand prints the log2 value") {
  CliRun r = run({"bounds", "--kind", "T1.3", "--r", "1024", "--b", "0"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "1026\n");

  CliRun l = run({"bounds", "--kind", "L2.2", "--r", "16", "--n", "4"});
  REQUIRE(l.code == 0);
  REQUIRE(l.out == "21\n");

  CliRun bad = run({"bounds", "--kind", "T9.9", "--r", "8"});
  REQUIRE(bad.code == 1);
  REQUIRE(bad.err.find("error:") != std::string::npos);

  CliRun eps = run({"bounds", "--kind", "T3.3", "--r", "64", "--epsilon", "0.7"});
  REQUIRE(eps.code == 1);
  REQUIRE(eps.err.find("epsilon") != std::string::npos);
}

TEST_CASE("exact census summary is well-formed JSON") {
  CliRun r = run({"census", "--group", "cyclic:3"});
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  REQUIRE(j["schema"] == "census-summary/1");
  REQUIRE(j["group"] == "cyclic:3");
  REQUIRE(j["r"] == 3);
  REQUIRE(j["mode"] == "exact");
  REQUIRE(j["reduced"] == false);
  REQUIRE(j["complete"] == true);
  REQUIRE(j["total"] == 8);
  REQUIRE(j["counts"]["drr"] == 4);
  REQUIRE(j["counts"]["normal_non_drr"] == 4);
  REQUIRE(j["counts"]["non_normal"] == 0);
  REQUIRE(j["drr_proportion"]["num"] == 1);
  REQUIRE(j["drr_proportion"]["den"] == 2);
  REQUIRE(j["drr_proportion"]["decimal"] == "0.500000");
}

TEST_CASE("sampled census summary carries the seed") {
  CliRun r = run({"census", "--group", "cyclic:9", "--mode", "sampled", "--samples", "200", "--seed", "7"});
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  REQUIRE(j["schema"] == "census-summary/1");
  REQUIRE(j["mode"] == "sampled");
  REQUIRE(j["seed"] == 7);
  REQUIRE(j["total"] == 200);
  REQUIRE(j.contains("ci95_halfwidth"));
}

TEST_CASE("unlabelled census summary reports class counts") {
  CliRun r = run({"census", "--group", "cyclic:3", "--mode", "unlabelled"});
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  REQUIRE(j["mode"] == "unlabelled");
  REQUIRE(j["cd_count"] == 6);
  REQUIRE(j["drr_count"] == 2);
  REQUIRE(j["drr_subsets"] == 4);
}

TEST_CASE("census flag combinations are validated") {
  REQUIRE(run({"census", "--group", "cyclic:4", "--mode", "sampled", "--reduce-by-aut"}).code == 1);
  REQUIRE(run({"census", "--group", "cyclic:4", "--mode", "unlabelled", "--out", "x.csv"}).code == 1);
  REQUIRE(run({"census", "--group", "cyclic:4", "--seed", "5"}).code == 1);
  REQUIRE(run({"census", "--group", "cyclic:4", "--samples", "10"}).code == 1);
  REQUIRE(run({"census", "--group", "cyclic:4", "--mode", "nonsense"}).code == 1);
  REQUIRE(run({"census", "--group", "nosuch:4"}).code == 1);
  REQUIRE(run({"census"}).code == 1);
}

TEST_CASE("classify reports the record for one subset") {
  CliRun r = run({"classify", "--group", "cyclic:5", "--set", "06"});
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  REQUIRE(j["schema"] == "classify/1");
  REQUIRE(j["group"] == "cyclic:5");
  REQUIRE(j["subset"] == "06");
  REQUIRE(j["aut_order"] == 5);
  REQUIRE(j["class"] == "drr");
  REQUIRE(j["orbit_size"] == 4);
  REQUIRE_FALSE(j.contains("hypotheses"));

  CliRun f = run({"classify", "--group", "cyclic:5", "--set", "06", "--flags"});
  REQUIRE(f.code == 0);
  ordered_json g = ordered_json::parse(f.out);
  REQUIRE(g.contains("hypotheses"));
  REQUIRE(g["hypotheses"].contains("h1"));
  REQUIRE(g["hypotheses"]["overgroups"].is_array());

  REQUIRE(run({"classify", "--group", "cyclic:5", "--set", "zz"}).code == 1);
  REQUIRE(run({"classify", "--group", "cyclic:5"}).code == 1);
}

TEST_CASE("odd quotient output matches the hand-worked example") {
  CliRun r = run({"quotient", "--group", "cyclic:6", "--normal", "09", "--set", "16", "--odd"});
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  REQUIRE(j["schema"] == "quotient/1");
  REQUIRE(j["mode"] == "odd");
  REQUIRE(j["normal"] == std::vector<uint32_t>{0, 3});
  REQUIRE(j["quotient_order"] == 3);
  // S = {1,2,4} meets coset {1,4} twice and coset {2,5} once, so only the
  // class of 2 survives the parity map
  REQUIRE(j["connection_set"] == "04");
  REQUIRE(j["digraph"] == "3;04,01,02");
}

TEST_CASE("normal quotient output lists the cells") {
  CliRun r = run({"quotient", "--group", "cyclic:6", "--normal", "09", "--set", "16", "--normal-quotient"});
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  REQUIRE(j["mode"] == "normal");
  std::vector<std::vector<uint32_t>> cells = j["cells"];
  REQUIRE(cells == std::vector<std::vector<uint32_t>>{{0, 3}, {1, 4}, {2, 5}});
}

TEST_CASE("quotient requires exactly one mode flag") {
  REQUIRE(run({"quotient", "--group", "cyclic:6", "--normal", "09", "--set", "16"}).code == 1);
  REQUIRE(run({"quotient", "--group", "cyclic:6", "--normal", "09", "--set", "16", "--odd", "--normal-quotient"})
              .code == 1);
  // {0,2} is not a subgroup of cyclic:6
  REQUIRE(run({"quotient", "--group", "cyclic:6", "--normal", "05", "--set", "16", "--odd"}).code == 1);
}

TEST_CASE("verify subcommand emits one report line per suite") {
  CliRun r = run({"verify", "--suite", "sigma"});
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  REQUIRE(j["suite"] == "sigma");
  REQUIRE(j["pass"] == true);

  REQUIRE(run({"verify", "--suite", "nosuch"}).code == 1);
}

TEST_CASE("timings go to the error stream only") {
  CliRun r = run({"--timings", "bounds", "--kind", "T1.3", "--r", "1024", "--b", "0"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "1026\n");
  REQUIRE(r.err.find("wall_ms=") != std::string::npos);
}

TEST_CASE("bad invocations exit with a usage error") {
  REQUIRE(run({}).code == 1);
  REQUIRE(run({"frobnicate"}).code == 1);
  REQUIRE(run({"groups"}).code == 1);

  CliRun help = run({"--help"});
  REQUIRE(help.code == 0);
  REQUIRE(help.out.find("census") != std::string::npos);
}
