#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"
#include "verify.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = altrun::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli examples") {
  CHECK(run({"poly", "--family", "Fpoly", "--n", "4"}).out == "x + 7*x^2 + 29*x^3 + 31*x^4 + 29*x^5 + 7*x^6 + x^7\n");
  CHECK(run({"dist", "--class", "perm", "--stat", "altrun", "--n", "3"}).out == "2*x + 4*x^2\n");
  const Run b = run({"triangle", "--family", "R", "--rows", "1", "--format", "bfile"});
  CHECK(b.code == 0);
  CHECK(b.out.substr(b.out.find('\n') + 1) == "1 1\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"triangle", "--family", "Z"}).code == 2);
  CHECK(run({"triangle", "--family", "Rq", "--rows", "2", "--format", "bfile"}).code == 2);
  CHECK(run({"triangle", "--family", "R", "--format", "yaml"}).code == 2);
  CHECK(run({"poly", "--family", "cpoly", "--n", "0"}).code == 2);
  CHECK(run({"dist", "--class", "stirling", "--stat", "crun", "--n", "2"}).code == 2);
  CHECK(run({"dist", "--class", "signed", "--stat", "des_B", "--n", "12"}).code == 3);
  CHECK(run({"verify", "--suite", "nothing"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli triangle formats") {
  CHECK(run({"triangle", "--family", "T", "--rows", "2"}).out == "0: 1\n1: 0 1\n2: 0 1 1\n");
  const auto j = nlohmann::json::parse(run({"triangle", "--family", "gamma", "--rows", "4", "--format", "json"}).out);
  CHECK(j["rows"][4]["entries"].back() == "-15");
}

TEST_CASE("verify report") {
  const Run r = run({"verify", "--suite", "all", "--max-n", "7", "--order", "10"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["overall"] == true);
  std::vector<std::string> ids;
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    ids.push_back(c["check_id"]);
  }
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
  CHECK(run({"verify", "--suite", "all", "--max-n", "7", "--order", "10"}).out == r.out);
  for (const std::string suite : {"grammar", "triangles", "enumeration", "davidbarton", "series", "gamma"})
    CHECK(run({"verify", "--suite", suite, "--max-n", "5", "--order", "6"}).code == 0);
}

TEST_CASE("budget from the environment") {
  setenv("ALTRUN_BUDGET", "10", 1);
  CHECK(run({"dist", "--class", "perm", "--stat", "des", "--n", "4"}).code == 3);
  unsetenv("ALTRUN_BUDGET");
  CHECK(run({"dist", "--class", "perm", "--stat", "des", "--n", "4"}).code == 0);
}
