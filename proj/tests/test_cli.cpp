#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triprod/cli.hpp"

using namespace triprod;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

} // namespace

TEST_CASE("parse_pairs") {
  CHECK(cli::parse_pairs("3,3;3,5") == std::vector<ProbePair>{{3, 3}, {3, 5}});
  CHECK(cli::parse_pairs("4,7") == std::vector<ProbePair>{{4, 7}});
  CHECK(cli::parse_pairs("3,3;") == std::vector<ProbePair>{{3, 3}});
  CHECK_THROWS_AS(cli::parse_pairs(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_pairs("3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_pairs("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_pairs("-3,3"), std::invalid_argument);
}

TEST_CASE("derive-d") {
  const auto r = run({"derive-d"});
  CHECK(r.code == 0);
  CHECK(r.out == "(3c^3 + c)/(c^2 + 2c - 1)\n");
  const auto steps = run({"derive-d", "--steps"});
  CHECK(steps.out.find("difference = (c^2 + 2c - 1)d + (-3c^3 - c)") != std::string::npos);
  const json j = run_json({"derive-d"});
  CHECK(j["d"] == "(3c^3 + c)/(c^2 + 2c - 1)");
}

TEST_CASE("eval") {
  const auto r = run({"eval", "--c", "3", "--n", "20"});
  CHECK(r.code == 0);
  CHECK(r.out == "210\n");
  CHECK(run({"eval", "--c", "1", "--n", "7"}).out == "4\n");
  CHECK(run({"eval", "--c", "0", "--n", "7"}).out == "1\n");
  CHECK(run({"eval", "--c", "2", "--n", "3"}).out == "26/7\n");
  CHECK(run({"eval", "--c", "1/2", "--n", "3"}).out == "7/2\n");
  const json j = run_json({"eval", "--c", "3", "--n", "20"});
  CHECK(j["value"] == "210");
}

TEST_CASE("eval usage errors") {
  CHECK(run({"eval", "--c", "1/0", "--n", "3"}).code == 2);
  CHECK(run({"eval", "--c", "x", "--n", "3"}).code == 2);
  CHECK(run({"eval", "--c", "1", "--n", "5000"}).code == 2);
  CHECK(run({"eval", "--c", "1"}).code == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--family", "triangular", "--max", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("failures: 0") != std::string::npos);
  CHECK(r.out.find("checked 2500") != std::string::npos);

  const auto all = run({"verify", "--family", "all", "--max", "20", "--workers", "3"});
  CHECK(all.code == 0);
  for (const char* name : {"zero", "half", "ceilhalf", "period3", "triangular"})
    CHECK(all.out.find(std::string(name) + ": range 20, checked 400, failures: 0") !=
          std::string::npos);

  const json j = run_json({"verify", "--family", "all", "--max", "20"});
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  for (const auto& rep : j) {
    CHECK(rep["checked"] == 400);
    CHECK(rep["failures"].empty());
  }
  const json one = run_json({"verify", "--family", "period3", "--max", "10"});
  CHECK(one["subject"] == "period3");
  CHECK(one["range"] == 10);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--family", "square", "--max", "3"}).code == 2);
  CHECK(run({"verify", "--family", "zero", "--max", "0"}).code == 2);
  CHECK(run({"derive-d", "--bogus"}).code == 2);
  CHECK(run({"classify", "--probes", "3;3"}).code == 2);
  CHECK(run({"constraints"}).code == 2);
  CHECK(run({"constraints", "--pairs", "40,40"}).code == 2);
  CHECK(run({"table", "--max", "3"}).code == 2);
  CHECK(run({"table", "--family", "zero", "--c", "1", "--max", "3"}).code == 2);
  CHECK(run({"derive-d", "classify"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("weak probes are a check failure") {
  const auto r = run({"classify", "--probes", "2,2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("identically zero") != std::string::npos);
}

TEST_CASE("classify") {
  const auto r = run({"classify", "--range", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("surviving_c: 0, 1, 3\n") != std::string::npos);
  CHECK(r.out.find("family_map: 0 -> period3, 1 -> ceilhalf, 3 -> triangular\n") !=
        std::string::npos);
  CHECK(r.out.find("residual_cofactor_check: true") != std::string::npos);
  CHECK(r.out.find("cofactor_check: true") != std::string::npos);
  CHECK(r.out.find("complete: true") != std::string::npos);

  const auto single = run({"classify", "--probes", "3,3", "--range", "20"});
  CHECK(single.code == 1);
  CHECK(single.out.find("surviving_c: -1, 0, 1, 3") != std::string::npos);
  CHECK(single.out.find("unmatched_c: -1") != std::string::npos);
}

TEST_CASE("classify is byte-stable") {
  const auto a = run({"classify"});
  const auto b = run({"classify"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto ja = run({"--json", "classify"});
  const auto jb = run({"--json", "classify"});
  CHECK(ja.out == jb.out);
}

TEST_CASE("constraints") {
  const auto r = run({"constraints", "--pairs", "3,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("factors: c + 1, c, c - 1, c - 3\n") != std::string::npos);
  CHECK(r.out.find("cofactor: 2c^3 + c - 1\n") != std::string::npos);

  const auto two = run({"constraints", "--pairs", "3,5;2,2;3,6"});
  CHECK(two.out.find("cofactor: 8c^6 - c^5 + 7c^4 - 4c^3 + 4c^2 - 3c + 1\n") != std::string::npos);
  CHECK(two.out.find("(2,2) numerator: 0 (identically zero)") != std::string::npos);
  CHECK(two.out.find("factors: c + 1, c^2, c - 1, c - 3\n") != std::string::npos);
}

TEST_CASE("table") {
  const auto r = run({"table", "--family", "triangular", "--max", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "n T(n)\n0 0\n1 1\n2 3\n3 6\n4 10\n5 15\n6 21\n");
  const auto half = run({"table", "--family", "half", "--max", "1"});
  CHECK(half.out == "n T(n)\n0 1/2\n1 1/2\n");
  const auto sym = run({"table", "--c", "1", "--max", "5"});
  CHECK(sym.out == "n T(n)\n0 0\n1 1\n2 1\n3 2\n4 2\n5 3\n");
}

TEST_CASE("text and json agree on numbers") {
  const auto text = run({"table", "--family", "period3", "--max", "30"});
  const json j = run_json({"table", "--family", "period3", "--max", "30"});
  std::istringstream lines(text.out);
  std::string header;
  std::getline(lines, header);
  for (const auto& row : j["rows"]) {
    std::size_t n = 0;
    std::string value;
    lines >> n >> value;
    CHECK(n == row["n"].get<std::size_t>());
    CHECK(value == row["value"].get<std::string>());
  }

  const auto ctext = run({"constraints", "--pairs", "3,3;3,5"});
  const json cj = run_json({"constraints", "--pairs", "3,3;3,5"});
  for (const auto& rec : cj["constraints"]) {
    CHECK(ctext.out.find("numerator: " + rec["numerator"].get<std::string>()) != std::string::npos);
    CHECK(ctext.out.find("cofactor: " + rec["cofactor"].get<std::string>()) != std::string::npos);
    CHECK(ctext.out.find("scalar: " + rec["scalar"].get<std::string>()) != std::string::npos);
  }

  const auto cl = run({"classify", "--range", "30"});
  const json cjj = run_json({"classify", "--range", "30"});
  CHECK(cl.out.find("d = " + cjj["d"].get<std::string>()) != std::string::npos);
  CHECK(cl.out.find("common gcd: " + cjj["common_gcd"].get<std::string>()) != std::string::npos);
}

TEST_CASE("every command emits parseable json") {
  const std::vector<std::vector<std::string>> commands = {
      {"derive-d"},
      {"classify", "--range", "20"},
      {"verify", "--family", "zero", "--max", "5"},
      {"eval", "--c", "3", "--n", "4"},
      {"table", "--c", "3", "--max", "4"},
      {"constraints", "--pairs", "3,3"},
  };
  for (const auto& cmd : commands)
    CHECK_NOTHROW(run_json(cmd));
}

TEST_CASE("--out writes the json document") {
  const auto path = std::filesystem::temp_directory_path() / "triprod_cli_out_test.json";
  std::filesystem::remove(path);
  const auto r = run({"--out", path.string(), "eval", "--c", "3", "--n", "20"});
  CHECK(r.code == 0);
  CHECK(r.out == "210\n");
  std::ifstream in(path);
  REQUIRE(in.good());
  const json j = json::parse(in);
  CHECK(j["value"] == "210");
  std::filesystem::remove(path);
}
