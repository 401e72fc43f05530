#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "diffops/cli.hpp"

using namespace diffops;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  const Run r = run(std::move(args));
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit-code matrix") {
  struct Row {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Row> rows = {
      {{"gb", "--vars", "x,y", "--ideal", "x^2; x - y"}, kExitOk},
      {{"nf", "--vars", "x,y", "--ideal", "x^3 - y^2", "--poly", "x^3"}, kExitOk},
      {{"jacobian", "--vars", "x,y", "--ideal", "y^2-x^3"}, kExitOk},
      {{"jacobian", "--vars", "x,y", "--ideal", "x^2+y^2-1", "--char", "2"}, kExitOk},
      {{"semigroup", "--gens", "2,3", "pieces", "--degrees", "-3..3"}, kExitOk},
      {{"semigroup", "--gens", "2,3", "der"}, kExitOk},
      {{"semigroup", "--gens", "2,3", "present"}, kExitOk},
      {{"semigroup", "--gens", "2,3", "jacobian-ideal"}, kExitOk},
      {{"semigroup", "--gens", "2,3", "stable", "--gens", "3,4", "--kind", "dop"}, kExitOk},
      {{"semigroup", "--gens", "2,3", "closure", "--gens", "3,4"}, kExitOk},
      {{"semigroup", "--gens", "2,3", "meets-a", "--op", "(h^2+h-2)*x^-2"}, kExitOk},
      {{"semigroup", "--gens", "2,3", "simple", "--k-max", "5"}, kExitOk},
      {{"semigroup", "--gens", "3,5", "simple", "--k-max", "2", "--shift-bound", "0"}, kExitOk},
      {{"--format", "text", "semigroup", "--gens", "2,3", "der"}, kExitOk},
      {{"semigroup", "--gens", "2,3", "der", "--format", "text"}, kExitOk},
      {{"--help"}, kExitOk},
      // input errors
      {{}, kExitInputError},
      {{"frobnicate"}, kExitInputError},
      {{"gb", "--vars", "x,y", "--ideal", "2x"}, kExitInputError},
      {{"gb", "--vars", "x,y", "--ideal", "x + z"}, kExitInputError},
      {{"gb", "--vars", "x,x", "--ideal", "x"}, kExitInputError},
      {{"gb", "--vars", "x", "--ideal", "x", "--char", "4"}, kExitInputError},
      {{"gb", "--vars", "x", "--ideal", "x", "--order", "elim"}, kExitInputError},
      {{"nf", "--vars", "x", "--ideal", "x", "--poly", "1/0"}, kExitInputError},
      {{"jacobian", "--vars", "x,y", "--ideal", "x; x - 1"}, kExitInputError},
      {{"jacobian", "--vars", "x,y", "--ideal", "x^1/2"}, kExitInputError},
      {{"semigroup", "--gens", "2,4", "der"}, kExitInputError},
      {{"semigroup", "--gens", "2,3", "--char", "5", "der"}, kExitInputError},
      {{"semigroup", "--gens", "2,3", "pieces", "--degrees", "3..-3"}, kExitInputError},
      {{"semigroup", "--gens", "2,3", "pieces", "--degrees", "junk"}, kExitInputError},
      {{"semigroup", "--gens", "2,3", "stable", "--gens", "1"}, kExitInputError},
      {{"semigroup", "--gens", "2,3", "stable", "--gens", "2", "--kind", "weird"}, kExitInputError},
      {{"semigroup", "--gens", "2,3", "meets-a", "--op", "x"}, kExitInputError},
      {{"semigroup", "--gens", "2,3", "meets-a", "--op", "y"}, kExitInputError},
      {{"semigroup", "--gens", "2,3", "closure", "--gens", "0"}, kExitInputError},
      {{"--format", "xml", "semigroup", "--gens", "2,3", "der"}, kExitInputError},
      // budget
      {{"--max-pairs", "1", "gb", "--vars", "x,y,z", "--ideal", "x^3-y*z; y^3-x*z; z^3-x*y"}, kExitBudget},
      {{"--max-basis", "1", "semigroup", "--gens", "3,4,5", "jacobian-ideal"}, kExitBudget},
  };
  for (const auto& row : rows) {
    std::string joined;
    for (const auto& a : row.args) joined += a + " ";
    CAPTURE(joined);
    const Run r = run(row.args);
    CHECK(r.code == row.code);
    if (row.code == kExitOk) {
      CHECK(r.err.empty());
    } else {
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    }
  }
}

TEST_CASE("report schema") {
  const auto j = run_json({"jacobian", "--vars", "x,y", "--ideal", "y^2-x^3"});
  for (const char* key : {"command", "inputs", "result", "certificates", "warnings", "bounds"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["result"]["rank"] == 1);
  CHECK(j["result"]["regular"] == false);
  CHECK(j["result"]["minors"].size() == 2);
  CHECK(j["result"]["minors"][0]["value"] == "-3*x^2");
  CHECK(j["result"]["minor_support_check"] == true);
}

TEST_CASE("semigroup reports carry their certificates") {
  auto j = run_json({"semigroup", "--gens", "2,3", "simple", "--k-max", "5", "--shift-bound", "8"});
  CHECK(j["result"]["outcome"] == "SimpleProven");
  CHECK(j["certificates"].size() == 5);
  for (const auto& c : j["certificates"]) CHECK(c["gcd"] == "1");
  CHECK(j["warnings"].size() == 2);

  j = run_json({"semigroup", "--gens", "2,3", "stable", "--gens", "2,3", "--kind", "dop"});
  CHECK(j["result"]["stable"] == false);
  CHECK(j["result"]["witness"]["value"] == "-2");
  CHECK(j["certificates"][0]["image_in_ideal"] == false);

  j = run_json({"semigroup", "--gens", "2,3", "meets-a", "--op", "(h^2+h-2)*x^-2"});
  CHECK(j["result"]["exponent"] == 0);
  CHECK(j["certificates"][0]["status"] == "UnitProven");

  j = run_json({"semigroup", "--gens", "2,3", "pieces", "--degrees", "-2..1"});
  CHECK(j["result"]["pieces"][0]["operator"] == "(h^2 + h - 2)*x^-2");
  CHECK(j["result"]["pieces"][3]["operator"] == "(h - 1)*x");
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> args{"semigroup", "--gens", "3,4,5", "simple", "--k-max", "3"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> gb{"gb", "--vars", "x,y,z", "--ideal", "x^2-y*z; x*y-z^2"};
  CHECK(run(gb).out == run(gb).out);
}

TEST_CASE("golden fixtures") {
  const fs::path dir = DIFFOPS_FIXTURE_DIR;
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".args") continue;
    ++seen;
    CAPTURE(entry.path().filename().string());
    std::vector<std::string> args;
    std::istringstream lines(slurp(entry.path()));
    for (std::string line; std::getline(lines, line);) {
      if (!line.empty()) args.push_back(line);
    }
    fs::path expected = entry.path();
    expected.replace_extension(args.size() > 1 && args[1] == "text" ? ".txt" : ".json");
    REQUIRE(fs::exists(expected));
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(expected));
  }
  CHECK(seen > 0);
}
