#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "affsel/cli.hpp"
#include "affsel/io.hpp"

using namespace affsel;
using io::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

CliResult run(const std::vector<std::string>& args,
              const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  CliResult result;
  result.code = run_cli(args, in, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::string olsen_doc() { return run({"example", "olsen"}).out; }

std::filesystem::path temp_file(const std::string& name,
                                const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream file(path);
  file << content;
  return path;
}

std::string shell(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[512];
  while (fgets(buffer, sizeof buffer, pipe)) out += buffer;
  const int status = pclose(pipe);
  CHECK(status == 0);
  return out;
}

}  // namespace

TEST_CASE("example olsen emits the canonical instance") {
  const CliResult result = run({"example", "olsen"});
  REQUIRE(result.code == 0);
  const json doc = result.doc();
  CHECK(doc["kind"] == "graph");
  CHECK(doc["n"] == 2);
  CHECK(doc["m"] == 1);
  CHECK(doc["graph_vertices"] ==
        json::parse("[[-1,0,0],[1,0,0],[0,-1,1],[0,1,1]]"));
}

TEST_CASE("instances round-trip byte-identically") {
  const std::vector<std::vector<std::string>> invocations{
      {"example", "olsen"},
      {"example", "hahn-banach"},
      {"example", "random", "--seed", "3", "--n", "2", "--m", "2",
       "--vertices", "7"}};
  for (const auto& args : invocations) {
    const CliResult first = run(args);
    REQUIRE(first.code == 0);
    // Parse and re-emit: identical bytes.
    const auto instance = io::parse_instance(first.doc());
    json reemitted;
    std::visit([&reemitted](const auto& value) {
      reemitted = io::instance_json(value);
    }, instance);
    CHECK(reemitted.dump() + "\n" == first.out);
    // Identical invocations produce identical bytes.
    CHECK(run(args).out == first.out);
  }
}

TEST_CASE("select-global reads stdin and reports the certificate") {
  const CliResult result = run({"select-global"}, olsen_doc());
  REQUIRE(result.code == 0);
  const json doc = result.doc();
  CHECK(doc["status"] == "none_exists");
  CHECK(doc["certificate"].is_array());
  CHECK_FALSE(doc["certificate"].empty());
  CHECK_FALSE(doc.contains("map"));
}

TEST_CASE("select-local at the center") {
  const CliResult result =
      run({"select-local", "--point", "0,0"}, olsen_doc());
  REQUIRE(result.code == 0);
  const json doc = result.doc();
  CHECK(doc["kind"] == "local-selection");
  CHECK(doc["shrink_exponent"] == 1);
  CHECK(doc["simplex"] ==
        json::parse(R"([["1/2",0],[0,"1/2"],["-1/2","-1/2"]])"));
  CHECK(doc["map"]["matrix"] == json::parse(R"([["-2/3","1/3"]])"));
  CHECK(doc["map"]["offset"] == json::parse(R"(["1/3"])"));
}

TEST_CASE("select-local failure exit codes") {
  CHECK(run({"select-local", "--point", "1,0"}, olsen_doc()).code == 2);
  CHECK(run({"select-local", "--point", "2,0"}, olsen_doc()).code == 2);
  CHECK(run({"select-local", "--point", "0"}, olsen_doc()).code == 1);
  CHECK(run({"select-local", "--point", "zzz"}, olsen_doc()).code == 1);
}

TEST_CASE("input errors name the problem on stderr") {
  const CliResult garbage = run({"select-global"}, "{not json");
  CHECK(garbage.code == 1);
  CHECK_FALSE(garbage.err.empty());

  const CliResult missing = run({"select-global", "/nonexistent/path.json"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("/nonexistent/path.json") != std::string::npos);

  const CliResult wrong_kind = run({"audit"}, olsen_doc());
  CHECK(wrong_kind.code == 1);
  CHECK(wrong_kind.err.find("sampled") != std::string::npos);

  const CliResult bad_rational =
      run({"select-global"},
          R"({"kind":"graph","n":1,"m":1,"graph_vertices":[[0.5,1]]})");
  CHECK(bad_rational.code == 1);
  CHECK(bad_rational.err.find("decimal") != std::string::npos);

  CHECK(run({"unknown-subcommand"}).code == 1);
}

TEST_CASE("audit reports both conditions") {
  const std::string instance = run({"example", "hahn-banach"}).out;
  const CliResult result = run({"audit"}, instance);
  REQUIRE(result.code == 0);
  const json doc = result.doc();
  CHECK(doc["kind"] == "audit-report");
  CHECK(doc["convexity"]["passed"] == false);
  CHECK(doc["convexity"]["checked_triples"] == 2);
  CHECK(doc["intersection"]["passed"] == true);
  bool cross_witness = false;
  for (const auto& violation : doc["convexity"]["violations"]) {
    if (violation["witness"] == json::parse(R"(["1/2","-1/2"])")) {
      cross_witness = true;
      CHECK(violation["t"] == "1/2");
    }
  }
  CHECK(cross_witness);
}

TEST_CASE("sandwich subcommand") {
  const std::string doc = R"({
    "kind": "sandwich",
    "n": 1,
    "lower": [{"point": [-1], "value": 1}, {"point": [0], "value": 0},
              {"point": [1], "value": 1}],
    "upper": [{"point": [-1], "value": 1}, {"point": [0], "value": 2},
              {"point": [1], "value": 1}]
  })";
  const CliResult result = run({"sandwich"}, doc);
  REQUIRE(result.code == 0);
  CHECK(result.doc()["status"] == "found");
  CHECK(result.doc()["map"]["matrix"] == json::parse("[[0]]"));
  CHECK(result.doc()["map"]["offset"] == json::parse("[1]"));

  CHECK(run({"sandwich"}, olsen_doc()).code == 1);
}

TEST_CASE("verify replays a candidate map") {
  const auto map_path = temp_file(
      "affsel_test_map.json",
      R"({"kind":"affine-map","n":2,"m":1,"matrix":[[0,0]],"offset":[0]})");
  const CliResult result =
      run({"verify", "--map", map_path.string(), "--trials", "64", "--seed",
           "11"},
          olsen_doc());
  REQUIRE(result.code == 0);
  const json doc = result.doc();
  CHECK(doc["kind"] == "verify-report");
  CHECK(doc["trials"] == 64);
  CHECK(doc["passed"] == false);
  CHECK_FALSE(doc["failures"].empty());
  // Same seed, same bytes.
  CHECK(run({"verify", "--map", map_path.string(), "--trials", "64", "--seed",
             "11"},
            olsen_doc())
            .out == result.out);
  std::filesystem::remove(map_path);
}

TEST_CASE("verify accepts a selection outcome as the map source") {
  // Pipe the found outcome of a forced instance back through verify.
  const std::string instance =
      R"({"kind":"graph","n":2,"m":1,"graph_vertices":[[0,0,0],[1,0,1],[0,1,2]]})";
  const CliResult solved = run({"select-global"}, instance);
  REQUIRE(solved.code == 0);
  REQUIRE(solved.doc()["status"] == "found");
  const auto outcome_path =
      temp_file("affsel_test_outcome.json", solved.out);
  const CliResult replay =
      run({"verify", "--map", outcome_path.string(), "--trials", "32"},
          instance);
  REQUIRE(replay.code == 0);
  CHECK(replay.doc()["passed"] == true);
  std::filesystem::remove(outcome_path);
}

TEST_CASE("pretty mode labels approximations") {
  const CliResult result =
      run({"--pretty", "select-local", "--point", "0,0"}, olsen_doc());
  REQUIRE(result.code == 0);
  CHECK(result.out.find("\n  ") != std::string::npos);  // indented
  const json doc = result.doc();
  CHECK(doc["map"].contains("matrix_approx"));
  CHECK(doc["map"]["matrix_approx"][0][0].is_number_float());
  // Exact fields stay exact.
  CHECK(doc["map"]["matrix"][0][0] == "-2/3");
}

TEST_CASE("AFFSEL_SEED supplies the default seed") {
  setenv("AFFSEL_SEED", "424242", 1);
  const CliResult defaulted =
      run({"example", "random", "--n", "2", "--vertices", "5"});
  unsetenv("AFFSEL_SEED");
  const CliResult explicit_seed = run({"example", "random", "--n", "2",
                                       "--vertices", "5", "--seed", "424242"});
  CHECK(defaulted.out == explicit_seed.out);
}

TEST_CASE("example --out writes a file") {
  const auto path =
      std::filesystem::temp_directory_path() / "affsel_test_out.json";
  const CliResult result =
      run({"example", "olsen", "--out", path.string()});
  REQUIRE(result.code == 0);
  CHECK(result.out.empty());
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == olsen_doc());
  std::filesystem::remove(path);
}

TEST_CASE("the real binary composes through a pipe") {
  const std::string cli = AFFSEL_CLI_PATH;
  const std::string out =
      shell("'" + cli + "' example olsen | '" + cli + "' select-global");
  CHECK(json::parse(out)["status"] == "none_exists");
}
