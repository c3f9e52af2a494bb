#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <string>

#include <json.hpp>

#include "proc.hpp"

namespace {

const std::string kCli = HLP_CLI_PATH;
const std::string kData = HLP_TEST_DATA_DIR;

std::string fixture(const std::string& name) { return kData + "/" + name; }

std::map<std::string, nlohmann::json> eval_records(const std::string& output) {
  std::map<std::string, nlohmann::json> records;
  for (const std::string& line : proc::lines_of(output)) {
    if (line.empty() || line[0] != '{') continue;
    const auto record = nlohmann::json::parse(line);
    records[record["method"].get<std::string>()] = record;
  }
  return records;
}

}  // namespace

TEST_CASE("detect prints one stats row per level") {
  const auto result = proc::run(kCli + " detect --method hlp --seed 7 " +
                                fixture("two_triangles.edges"));
  REQUIRE(result.exit_code == 0);
  const auto lines = proc::lines_of(result.output);
  REQUIRE(lines.size() == 3);  // header + two levels
  CHECK(proc::tokens_of(lines[0])[0] == "level");
  CHECK(proc::tokens_of(lines[1])[0] == "1");
  CHECK(proc::tokens_of(lines[1])[3] == "2");   // communities
  CHECK(proc::tokens_of(lines[2])[0] == "2");
}

TEST_CASE("detect with a flat method prints a single row") {
  for (const std::string method : {"lp", "ds", "kcore"}) {
    const auto result = proc::run(kCli + " detect --method " + method +
                                  " --seed 1 " +
                                  fixture("two_triangles.edges"));
    REQUIRE(result.exit_code == 0);
    CHECK(proc::lines_of(result.output).size() == 2);
  }
}

TEST_CASE("detect exit codes follow the error contract") {
  SUBCASE("missing file") {
    const auto result = proc::run(kCli + " detect no_such_file");
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("cannot open") != std::string::npos);
  }
  SUBCASE("malformed input names the line") {
    const auto result = proc::run(kCli + " detect " +
                                  fixture("bad_line.edges"));
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("line 2") != std::string::npos);
  }
  SUBCASE("unknown method is a usage error") {
    const auto result = proc::run(kCli + " detect --method nope " +
                                  fixture("two_triangles.edges"));
    CHECK(result.exit_code == 2);
  }
  SUBCASE("export level out of range") {
    const auto result =
        proc::run(kCli + " detect --export dot --level 99 --output /tmp/x_hlp_test.dot " +
                  fixture("two_triangles.edges"));
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("out of range") != std::string::npos);
  }
  SUBCASE("export without output path") {
    const auto result = proc::run(kCli + " detect --export json " +
                                  fixture("two_triangles.edges"));
    CHECK(result.exit_code == 2);
  }
}

TEST_CASE("detect reads the mtx flavor by extension") {
  const auto result = proc::run(kCli + " detect --method lp " +
                                fixture("tiny.mtx"));
  REQUIRE(result.exit_code == 0);
  const auto row = proc::tokens_of(proc::lines_of(result.output)[1]);
  CHECK(row[1] == "3");  // nodes
  CHECK(row[2] == "2");  // edges
}

TEST_CASE("detect --json emits a parseable level report") {
  const auto result = proc::run(kCli + " detect --json --seed 7 " +
                                fixture("two_triangles.edges"));
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["meta"]["method"] == "hlp");
  CHECK(doc["meta"]["nodes"] == 6);
  REQUIRE(doc["levels"].size() >= 1);
  CHECK(doc["levels"][0]["communities"] == 2);
}

TEST_CASE("eval ranks the hierarchical method at or above flat propagation") {
  const auto result = proc::run(kCli + " eval --json --seed 3 " +
                                fixture("two_triangles.edges"));
  REQUIRE(result.exit_code == 0);
  auto records = eval_records(result.output);
  REQUIRE(records.size() == 4);
  const double hlp_q = records["hlp"]["modularity"].get<double>();
  const double lp_q = records["lp"]["modularity"].get<double>();
  CHECK(hlp_q >= lp_q);
  CHECK(records["kcore"].contains("modularity"));
  CHECK(records["ds"].contains("modularity"));
}

TEST_CASE("eval rejects graphs without edges") {
  const std::string path = "/tmp/hlp_selfloops_test.edges";
  std::ofstream(path) << "0 0\n1 1\n";
  const auto result = proc::run(kCli + " eval " + path);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("undefined") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("repeated invocations are identical modulo elapsed fields") {
  const std::string cmd = kCli + " detect --method hlp --seed 7 " +
                          fixture("two_triangles.edges");
  const auto first = proc::run(cmd);
  const auto second = proc::run(cmd);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(proc::strip_elapsed(first.output, 5) ==
        proc::strip_elapsed(second.output, 5));
}

TEST_CASE("json export round-trips through the CLI") {
  const std::string out_path = "/tmp/hlp_cli_test_export.json";
  const auto result = proc::run(kCli + " detect --seed 7 --export json --output " +
                                out_path + " " +
                                fixture("two_triangles.edges"));
  REQUIRE(result.exit_code == 0);
  std::ifstream in(out_path);
  REQUIRE(in.good());
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["meta"]["graph"] == "two_triangles.edges");
  CHECK(doc["levels"][0]["communities"] == 2);
  CHECK(doc["assignments"]["level1"].size() == 6);
  std::remove(out_path.c_str());
}

TEST_CASE("dot export writes one file per level by default") {
  const std::string out_path = "/tmp/hlp_cli_test_levels.dot";
  const auto result = proc::run(kCli + " detect --seed 7 --export dot --output " +
                                out_path + " " +
                                fixture("two_triangles.edges"));
  REQUIRE(result.exit_code == 0);
  std::ifstream level1("/tmp/hlp_cli_test_levels.l1.dot");
  std::ifstream level2("/tmp/hlp_cli_test_levels.l2.dot");
  CHECK(level1.good());
  CHECK(level2.good());
  std::remove("/tmp/hlp_cli_test_levels.l1.dot");
  std::remove("/tmp/hlp_cli_test_levels.l2.dot");
}
