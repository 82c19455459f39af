#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "relweyl/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = relweyl::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> parse_jsonl(const std::string& text) {
  std::vector<json> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) rows.push_back(json::parse(line));
  return rows;
}

}  // namespace

TEST_CASE("roots A2 json") {
  const auto r = run({"roots", "--type", "A2", "--output", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["type"] == "A2");
  CHECK(j["rank"] == 2);
  CHECK(j["num_positive"] == 3);
  CHECK(j["weyl_order"] == "6");
  CHECK(j["cartan_matrix"] == json({{2, -1}, {-1, 2}}));
  CHECK(j["positive_roots"].size() == 3);
  CHECK(j["positive_roots"][2]["coords"] == json({1, 1}));
  CHECK(j["positive_roots"][2]["height"] == 2);
}

TEST_CASE("roots tsv lists one row per positive root") {
  const auto r = run({"roots", "--type", "B2", "--output", "tsv"});
  CHECK(r.code == 0);
  int lines = 0;
  std::stringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 5);  // header + 4 positive roots
  CHECK(r.out.substr(0, 19) == "index\theight\tcoords");
}

TEST_CASE("unsupported type exits 3") {
  const auto r = run({"roots", "--type", "Z9"});
  CHECK(r.code == 3);
  CHECK(r.err.find("Z9") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("missing subcommand exits 2") {
  const auto r = run({});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("bad J exits 2") {
  const auto r = run({"relative", "--type", "A2", "--J", "0"});
  CHECK(r.code == 2);
  const auto r2 = run({"relative", "--type", "A2", "--J", "x"});
  CHECK(r2.code == 2);
  const auto r3 = run({"relative", "--type", "A2", "--J", "all"});
  CHECK(r3.code == 2);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("weyl B2") {
  const auto r = run({"weyl", "--type", "b2", "--output", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["type"] == "B2");
  CHECK(j["order"] == 8);
  CHECK(j["longest_length"] == 4);
  CHECK(j["degrees"] == json({2, 4}));
  CHECK(j["length_histogram"] == json({"1", "2", "2", "2", "1"}));
}

TEST_CASE("relative A3 J=1,3") {
  const auto r = run({"relative", "--type", "A3", "--J", "1,3", "--output", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["J"] == json({1, 3}));
  CHECK(j["parabolic_order"] == "4");
  CHECK(j["normalizer_order"] == "8");
  CHECK(j["relative_order"] == 2);
  REQUIRE(j["generators"].size() == 1);
  CHECK(j["generators"][0] == "2 1 3 2");
  CHECK(j["semidirect"]["intersection_trivial"] == true);
  CHECK(j["semidirect"]["product_covers"] == true);
  CHECK(j["semidirect"]["parabolic_normal"] == true);
  CHECK(j["reflection_classification"]["fixed_space_dim"] == 1);
  CHECK(j["conjugacy_classes"].size() == 2);
}

TEST_CASE("characters A3 J=1,3 json") {
  const auto r = run({"characters", "--type", "A3", "--J", "1,3", "--output", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["graded_dims"] == json({1, 1, 2, 1, 1}));
  CHECK(j["top_degree"] == 8);
  REQUIRE(j["classes"].size() == 2);
  CHECK(j["classes"][1]["representative_word"] == "2 1 3 2");
  CHECK(j["classes"][1]["epsilon"] == 1);
}

TEST_CASE("epsilon A3 J=1,3") {
  const auto r = run({"epsilon", "--type", "A3", "--J", "1,3", "--output", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["top_exponent"] == 4);
  CHECK(j["relative_order"] == 2);
  REQUIRE(j["classes"].size() == 2);
  CHECK(j["classes"][0]["epsilon"] == "1");
  CHECK(j["classes"][1]["representative"] == "2 1 3 2");
  CHECK(j["classes"][1]["epsilon"] == "1");
}

TEST_CASE("verify A2 all subsets json") {
  const auto r = run({"verify", "--type", "A2", "--primes", "2,3", "--output", "json"});
  CHECK(r.code == 0);
  const auto rows = parse_jsonl(r.out);
  // 4 subsets x (5 core + 2 primes) + sign specialization + braid = 30
  CHECK(rows.size() == 30);
  for (const auto& row : rows) {
    CHECK(row["pass"] == true);
    CHECK(row.contains("ms"));
  }
}

TEST_CASE("verify single subset and claim") {
  const auto r = run({"verify", "--type", "A3", "--J", "1,3", "--claims", "sl4_example",
                      "--output", "json"});
  CHECK(r.code == 0);
  const auto rows = parse_jsonl(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["claim"] == "sl4_example");
  CHECK(rows[0]["J"] == json({1, 3}));
  CHECK(rows[0]["pass"] == true);
}

TEST_CASE("verify --J none restricts to the empty subset") {
  const auto r = run({"verify", "--type", "A2", "--J", "none", "--primes", "5", "--claims",
                      "invariant_dims,sign_specialization", "--output", "json"});
  CHECK(r.code == 0);
  const auto rows = parse_jsonl(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["claim"] == "invariant_dims");
  CHECK(rows[0]["J"] == json::array());
  CHECK(rows[1]["claim"] == "sign_specialization");
}

TEST_CASE("verify determinism modulo timings") {
  const std::vector<std::string> args = {"verify", "--type", "B2", "--primes", "2,5",
                                         "--output", "json"};
  const auto r1 = run(args);
  const auto r2 = run(args);
  CHECK(r1.code == 0);
  auto strip = [](const std::string& text) {
    std::string out;
    for (auto& row : parse_jsonl(text)) {
      row.erase("ms");
      out += row.dump() + "\n";
    }
    return out;
  };
  CHECK(strip(r1.out) == strip(r2.out));
}

TEST_CASE("verify pretty output has a footer") {
  const auto r = run({"verify", "--type", "A1", "--primes", "3", "--output", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);
}

TEST_CASE("verify unknown type is a failed report, exit 1") {
  const auto r = run({"verify", "--type", "E7", "--claims", "semidirect", "--output", "json"});
  CHECK(r.code == 1);
  const auto rows = parse_jsonl(r.out);
  REQUIRE(!rows.empty());
  CHECK(rows[0]["claim"] == "context");
  CHECK(rows[0]["pass"] == false);
}

TEST_CASE("--out writes the file") {
  const std::string path = "cli_out_test.json";
  const auto r = run({"roots", "--type", "A1", "--output", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  const json j = json::parse(f);
  CHECK(j["type"] == "A1");
  f.close();
  std::remove(path.c_str());
}

TEST_CASE("--out to an unwritable path exits 4") {
  const auto r = run({"roots", "--type", "A1", "--out", "/nonexistent_dir_xyz/out.json"});
  CHECK(r.code == 4);
  CHECK(!r.err.empty());
}

TEST_CASE("bad primes exit 2") {
  const auto r = run({"verify", "--type", "A1", "--primes", "2,x"});
  CHECK(r.code == 2);
  const auto r2 = run({"verify", "--type", "A1", "--primes", "1"});
  CHECK(r2.code == 2);
}

TEST_CASE("enumeration bound surfaces as exit 1") {
  const auto r = run({"weyl", "--type", "A3", "--max-order", "10"});
  CHECK(r.code == 1);
  CHECK(!r.err.empty());
}

TEST_CASE("RELWEYL_MAX_ORDER env var is honored") {
  setenv("RELWEYL_MAX_ORDER", "10", 1);
  const auto r = run({"weyl", "--type", "A3"});
  CHECK(r.code == 1);
  setenv("RELWEYL_MAX_ORDER", "notanumber", 1);
  const auto r2 = run({"weyl", "--type", "A3"});
  CHECK(r2.code == 2);
  unsetenv("RELWEYL_MAX_ORDER");
  const auto r3 = run({"weyl", "--type", "A3", "--output", "json"});
  CHECK(r3.code == 0);
  CHECK(json::parse(r3.out)["order"] == 24);
}
