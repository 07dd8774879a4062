#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "symforms/json_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SYMFORMS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) {
    r.output.append(buf, got);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("invariants subcommand") {
  SUBCASE("headline supersingular Enriques query") {
    auto r = run_cli("invariants --preset supersingular-enriques --n 2 --q 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "= 2"));
    CHECK(contains(r.output, "h^{2,0} > 1"));
  }
  SUBCASE("K3 control in characteristic 2") {
    auto r = run_cli("invariants --preset k3 --char 2 --n 3 --q 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "= 1"));
  }
  SUBCASE("explicit Hodge data") {
    auto r = run_cli("invariants --h 1,1,1 --char 0 --n 2 --q 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "= 1"));
  }
  SUBCASE("oracle flag cross-checks") {
    auto r = run_cli(
        "invariants --preset supersingular-enriques --n 3 --q 2 --oracle");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "agrees"));
  }
  SUBCASE("basis flag prints a fixed basis") {
    auto r = run_cli(
        "invariants --preset supersingular-enriques --n 2 --q 2 --basis");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "fixed basis"));
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("invariants --preset no-such-surface --n 2 --q 2").exit_code == 2);
  CHECK(run_cli("invariants --h 1,1,1 --char 6 --n 2 --q 2").exit_code == 2);
  CHECK(run_cli("invariants --h 1,1,1 --n 1 --q 3").exit_code == 2);  // q > 2n
  CHECK(run_cli("invariants --preset k3 --h 1,0,1 --n 2 --q 2").exit_code == 2);
  CHECK(run_cli("invariants --n 2 --q 2").exit_code == 2);  // no surface
  CHECK(run_cli("compare --preset k3").exit_code == 2);     // char 0
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("JSON output round-trips through the documented schema") {
  auto r = run_cli(
      "invariants --preset supersingular-enriques --n 2 --q 2 --basis --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("characteristic") == 2);
  CHECK(j.at("n") == 2);
  CHECK(j.at("q") == 2);
  CHECK(j.at("hodge") == nlohmann::json({1, 1, 1}));
  CHECK(j.at("dimension") == 2);
  CHECK(j.at("method") == "generator-kernel");
  REQUIRE(j.contains("basis"));

  auto report = symforms::report_from_json(j);
  CHECK(symforms::report_to_json(report) == j);
}

TEST_CASE("byte-identical output for identical configs") {
  const std::string args = "table --preset supersingular-enriques --n-max 3";
  CHECK(run_cli(args).output == run_cli(args).output);
}

TEST_CASE("table subcommand") {
  SUBCASE("single q row") {
    auto r = run_cli("table --preset supersingular-enriques --n-max 4 --q 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "2\t1\t2\t2\t2"));
  }
  SUBCASE("q = 2 row vanishes without global 2-forms") {
    auto r = run_cli("table --preset enriques-char0 --n-max 4 --q 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "2\t0\t0\t0\t0"));
  }
  SUBCASE("q = 0 row is all ones") {
    auto r = run_cli("table --preset abelian-char0 --n-max 4 --q 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "0\t1\t1\t1\t1"));
  }
}

TEST_CASE("compare subcommand") {
  SUBCASE("supersingular Enriques reports the missing sections") {
    auto r = run_cli("compare --preset supersingular-enriques --n-max 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "n=2 q=2: char0=1 engine=2"));
  }
  SUBCASE("K3 at characteristic 2 is clean") {
    auto r = run_cli("compare --preset k3 --char 2 --n-max 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "no discrepancies"));
  }
  SUBCASE("supersingular data at characteristic 3 is clean") {
    auto r = run_cli("compare --h 1,1,1 --char 3 --n-max 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "no discrepancies"));
  }
  SUBCASE("JSON discrepancy list") {
    auto r = run_cli(
        "compare --preset supersingular-enriques --n-max 2 --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.is_array());
    CHECK(j.size() >= 1);
    CHECK(j[0].at("n") == 2);
    CHECK(j[0].at("q") == 2);
  }
}

TEST_CASE("presets subcommand lists all four") {
  auto r = run_cli("presets");
  CHECK(r.exit_code == 0);
  for (const char* name : {"supersingular-enriques", "enriques-char0", "k3",
                           "abelian-char0"}) {
    CHECK(contains(r.output, name));
  }
}
