#include <catch2/catch_amalgamated.hpp>

#include "coordlat/lattice.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace coordlat;
using json = nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Run the installed binary with the given arguments, capturing stdout.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(COORDLAT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

} // namespace

TEST_CASE("table emits the expected csv window") {
  RunResult r = run_cli("table --array ball --N 5 --format csv");
  REQUIRE(r.status == 0);
  REQUIRE(r.out ==
          "1,1,1,1,1\n"
          "1,3,5,7,9\n"
          "1,5,13,25,41\n"
          "1,7,25,63,129\n"
          "1,9,41,129,321\n");

  RunResult tri = run_cli("table --array coord-tri --N 5 --format csv");
  REQUIRE(tri.status == 0);
  REQUIRE(tri.out ==
          "1,0,0,0,0\n"
          "2,1,0,0,0\n"
          "2,4,1,0,0\n"
          "2,8,6,1,0\n"
          "2,12,18,8,1\n");
}

TEST_CASE("series emits indexed csv rows") {
  RunResult r = run_cli("series --family shell --max-n 6 --format csv");
  REQUIRE(r.status == 0);
  REQUIRE(r.out == "0,1\n1,2\n2,8\n3,38\n4,192\n5,1002\n6,5336\n");
}

TEST_CASE("series json carries big values as decimal strings") {
  RunResult r = run_cli("series --family ball --max-n 40 --format json");
  REQUIRE(r.status == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["family"] == "ball");
  REQUIRE(doc["max_n"] == 40);
  REQUIRE(doc["values"].size() == 41);
  REQUIRE(doc["values"][8] == 265729); // still a plain number
  REQUIRE(doc["values"][40].is_string());
  std::vector<Int> want = diagonal(DiagKind::Ball, 40);
  REQUIRE(doc["values"][40].get<std::string>() == want[40].str());
}

TEST_CASE("verify succeeds with a well-formed json report") {
  RunResult r =
      run_cli("verify positivity --smoke --no-timing --seed 42 --format json");
  REQUIRE(r.status == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["suite"] == "positivity");
  REQUIRE(doc["params"]["smoke"] == true);
  REQUIRE(doc["seed"] == 42);
  REQUIRE_FALSE(doc.contains("elapsed_ms"));
  REQUIRE(doc["checks"].is_array());
  REQUIRE(doc["checks"].size() >= 4);
  for (const json& c : doc["checks"]) {
    REQUIRE(c.contains("id"));
    REQUIRE(c.contains("claim"));
    REQUIRE(c["verdict"] == "pass");
  }
}

TEST_CASE("verify output is byte-identical across runs without timing") {
  const std::string args = "verify riordan --smoke --no-timing --format json";
  RunResult a = run_cli(args), b = run_cli(args);
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  REQUIRE_FALSE(a.out.empty());
  REQUIRE(a.out == b.out);
}

TEST_CASE("verify csv report has a header row") {
  RunResult r = run_cli("verify hankel --smoke --no-timing --format csv");
  REQUIRE(r.status == 0);
  REQUIRE(r.out.rfind("id,claim,verdict,witness\n", 0) == 0);
  REQUIRE(r.out.find(",pass,") != std::string::npos);
  REQUIRE(r.out.find(",fail,") == std::string::npos);
}

TEST_CASE("positivity overrides are honored and reported") {
  RunResult r = run_cli(
      "verify positivity --smoke --no-timing --window 4 --max-order 2 "
      "--format json");
  REQUIRE(r.status == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["params"]["window"] == 4);
  REQUIRE(doc["params"]["max_order"] == 2);
  for (const json& c : doc["checks"]) REQUIRE(c["verdict"] == "pass");
}

TEST_CASE("bad arguments exit nonzero") {
  REQUIRE(run_cli("table --array nonsense").status != 0);
  REQUIRE(run_cli("series --family nonsense").status != 0);
  REQUIRE(run_cli("verify nonsense").status != 0);
  REQUIRE(run_cli("table --N 0").status != 0);
  REQUIRE(run_cli("").status != 0); // a subcommand is required
}
