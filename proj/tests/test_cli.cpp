#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "moduli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = moduli::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("real 10 as JSON") {
  const auto r = run({"real", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 10);
  CHECK(j["count"] == 2);
  CHECK(r.out.rfind("{\n  \"n\": 10,\n  \"count\": 2", 0) == 0);
}

TEST_CASE("branch 7 table") {
  const auto r = run({"branch", "7", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("components=2") != std::string::npos);
  const auto g = run({"branch", "--genus", "3"});
  CHECK(g.out == r.out);
}

TEST_CASE("census of the real locus") {
  const auto r = run({"census", "--from", "4", "--to", "100", "--real", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const std::vector<int> disconnected = j["disconnected"];
  const std::vector<int> expected{10, 14, 18, 22, 26, 28, 30, 34, 38, 42, 44, 46, 50, 52, 54, 58,
                                  62, 66, 68, 70, 74, 76, 78, 82, 86, 88, 90, 92, 94, 98, 100};
  CHECK(disconnected == expected);
  CHECK(j["rows"].size() == 97);
  const auto b = run({"census", "--from", "4", "--to", "20", "--branch"});
  CHECK(b.code == 0);
  CHECK(b.out.find("disconnected: 6 values: 5 7 11 13 17 19") != std::string::npos);
}

TEST_CASE("DOT output") {
  const auto r = run({"real", "6", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"0\" -- \"3\"") != std::string::npos);
  const auto b = run({"branch", "5", "--format", "dot"});
  CHECK(b.out.find("label=\"B_2\"") != std::string::npos);
}

TEST_CASE("witness subcommands emit certified JSON") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"witness", "fixed", "4", "5", "0", "A"},
        std::vector<std::string>{"witness", "fixed", "7", "2", "2", "C"},
        std::vector<std::string>{"witness", "fixed", "5", "3", "1", "A"},
        std::vector<std::string>{"witness", "real", "5", "A1"},
        std::vector<std::string>{"witness", "real", "6", "2", "--floating"},
        std::vector<std::string>{"witness", "klein", "9"},
        std::vector<std::string>{"witness", "dihedral", "10", "4", "5"}}) {
    const auto r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const auto j = nlohmann::json::parse(r.out);
    for (const double res : j["certificate"]["residuals"]) {
      CHECK(res < 1e-9);
    }
  }
  CHECK(nlohmann::json::parse(run({"witness", "fixed", "5", "3", "1", "A"}).out)["backend"] == "exact");
  CHECK(nlohmann::json::parse(run({"witness", "fixed", "4", "5", "0", "A"}).out)["backend"] == "floating");
}

TEST_CASE("verify, strata and symmetries") {
  const auto v = run({"verify", "30"});
  CHECK(v.code == 0);
  CHECK(v.out.find("0 mismatches") != std::string::npos);
  const auto s = run({"strata", "4", "--format", "json"});
  CHECK(nlohmann::json::parse(s.out)["strata"].size() == 4);
  const auto y = run({"symmetries", "5", "--format", "json"});
  CHECK(nlohmann::json::parse(y.out)["count"] == 4);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"branch", "3"}).code == 2);
  CHECK(run({"branch", "x"}).code == 2);
  CHECK(run({"real", "10", "--format", "xml"}).code == 2);
  CHECK(run({"witness", "dihedral", "10", "0", "1"}).code == 2);
  CHECK(run({"witness", "fixed", "8", "3", "2", "C"}).code == 2);
  CHECK(run({"witness", "klein", "8"}).code == 2);
  CHECK(run({"census", "--from", "10", "--to", "5"}).code == 2);
  CHECK(run({"branch", "5", "--genus", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"real", "28", "--format", "json"}).out == run({"real", "28", "--format", "json"}).out);
  CHECK(run({"witness", "dihedral", "10", "2", "3"}).out == run({"witness", "dihedral", "10", "2", "3"}).out);
}
