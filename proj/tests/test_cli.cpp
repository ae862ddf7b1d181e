#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "leavitt/cli.hpp"
#include "leavitt/serialize.hpp"

using namespace leavitt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("leavitt_cli_" + name)).string();
}

}  // namespace

TEST_CASE("profile command") {
  Run r = run_args({"profile", "--n", "35", "--d", "13"});
  REQUIRE(r.code == kExitVerified);
  json j = json::parse(r.out);
  CHECK(j["hseq"] == json::parse("[1,6,11,3,8,13,5,10,2,7,12,4,9]"));
  CHECK(j["d1"] == 5);
  CHECK(j["f2"] == 5);
  Run small = run_args({"profile", "--n", "5", "--d", "3"});
  CHECK(json::parse(small.out)["automorphism_count"] == "48");
}

TEST_CASE("usage errors") {
  CHECK(run_args({}).code == kExitUsage);
  CHECK(run_args({"profile", "--n", "5"}).code == kExitUsage);
  CHECK(run_args({"profile", "--n", "1", "--d", "1"}).code == kExitUsage);
  CHECK(run_args({"frobnicate"}).code == kExitUsage);
  CHECK(run_args({"verify"}).code == kExitUsage);
  Run coprime = run_args({"verify", "--n", "5", "--d", "2"});
  CHECK(coprime.code == kExitUsage);
  CHECK(coprime.err.find("not-coprime") != std::string::npos);
  CHECK(run_args({"--help"}).code == 0);
}

TEST_CASE("verify exit codes") {
  Run ok = run_args({"verify", "--n", "5", "--d", "3"});
  CHECK(ok.code == kExitVerified);
  json j = json::parse(ok.out);
  CHECK(j["generation"] == "certified");
  CHECK(j["certificate"]["ok"] == true);

  Run lex = run_args({"verify", "--set", default_fixture_dir() + "/M3L5-lex.json"});
  CHECK(lex.code == kExitInconclusive);
  CHECK(json::parse(lex.out)["closure"]["unresolved"] == json::parse(R"(["e_{1,3}"])"));

  Run closure = run_args({"verify", "--set", default_fixture_dir() + "/M3L5-c.json"});
  CHECK(closure.code == kExitVerified);
  CHECK(json::parse(closure.out)["generation"] == "verified-by-closure");

  GeneratorSet g = construct_main(make_profile(5, 3));
  json bad = generator_set_to_json(g);
  bad.erase("placement");
  bad["provenance"] = "external";
  bad["X"][0]["entries"][0] = "x2";
  std::string path = temp_path("bad.json");
  std::ofstream(path) << bad.dump();
  Run broken = run_args({"verify", "--set", path});
  CHECK(broken.code == kExitRelationFailure);
  CHECK(json::parse(broken.out)["relations"]["ok"] == false);
  std::filesystem::remove(path);
}

TEST_CASE("verify writes the certificate") {
  std::string path = temp_path("cert.json");
  Run r = run_args({"verify", "--n", "8", "--d", "5", "--placement", "random", "--seed", "4", "--certificate-out", path});
  CHECK(r.code == kExitVerified);
  std::ifstream in(path);
  json c = json::parse(in);
  CHECK(c["n"] == 8);
  CHECK(c["d"] == 5);
  CHECK(c["nodes"].size() > 25);
  std::filesystem::remove(path);
}

TEST_CASE("output is deterministic without timings") {
  for (std::vector<std::string> args : {std::vector<std::string>{"verify", "--n", "9", "--d", "5"},
                                        std::vector<std::string>{"construct", "--n", "8", "--d", "3", "--placement",
                                                                 "random", "--seed", "17"},
                                        std::vector<std::string>{"verify", "--n", "5", "--d", "3", "--lex"}}) {
    Run a = run_args(args);
    Run b = run_args(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seconds") == std::string::npos);
  }
  Run timed = run_args({"--timing", "verify", "--n", "5", "--d", "3"});
  CHECK(timed.out.find("seconds") != std::string::npos);
}

TEST_CASE("construct command") {
  Run r = run_args({"construct", "--n", "6", "--d", "3", "--graded"});
  REQUIRE(r.code == 0);
  GeneratorSet g = generator_set_from_json(json::parse(r.out));
  CHECK(g.X == build_graded_generators(6, 3).X);
  Run pretty = run_args({"construct", "--n", "5", "--d", "3", "--pretty"});
  CHECK(pretty.out.rfind("M_3(L_5) main-construction\nX_1 =\n[ x1  0  0 ]\n", 0) == 0);
  CHECK(run_args({"construct", "--n", "5", "--d", "3", "--graded"}).code == kExitUsage);
}

TEST_CASE("classify command") {
  Run r = run_args({"classify", "--n", "5", "--d", "2"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["compare"]["verdict"] == "not isomorphic");
  CHECK(j["module_type"] == json::parse("[1,2]"));
  Run g = run_args({"classify", "--n", "6", "--d", "4", "--graded"});
  json jg = json::parse(g.out);
  CHECK(jg["graded_iso_exists"] == true);
  CHECK(jg["graded_reason"] == "prime-divisibility");
  Run other = run_args({"classify", "--n", "5", "--d", "2", "--m", "5", "--k", "6"});
  CHECK(json::parse(other.out)["compare"]["isomorphic"] == true);
}

TEST_CASE("field selection through the environment") {
  setenv("LEAVITT_FIELD", "fp7", 1);
  Run r = run_args({"verify", "--n", "5", "--d", "3"});
  CHECK(r.code == kExitVerified);
  setenv("LEAVITT_FIELD", "bogus", 1);
  CHECK(run_args({"profile", "--n", "5", "--d", "3"}).code == kExitUsage);
  unsetenv("LEAVITT_FIELD");
  CHECK(run_args({"profile", "--n", "5", "--d", "3"}).code == 0);
}
