#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// run the tool with the given arguments, capturing stdout
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(FG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int st = pclose(f);
  RunResult r;
  r.out = out;
  if (WIFEXITED(st)) r.code = WEXITSTATUS(st);
  return r;
}

int nonblank_lines(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(bool(in));
  int count = 0;
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) ++count;
  return count;
}

}  // namespace

TEST_CASE("construct reports the suzuki design") {
  auto r = run_cli("construct --family suzuki --q 8");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["family"] == "suzuki");
  CHECK(j["q"] == 8);
  CHECK(j["u"] == 65);
  CHECK(j["k"] == 9);
  CHECK(j["lambda"] == 9);
  CHECK(j["omega_size"] == 520);
  CHECK(j["valency"] == 8);
  CHECK(j["components"] == json::array({520}));
  CHECK(j["spread"]["v"] == 8);
  CHECK(j["spread"]["r"] == 8);
  CHECK(j["spread"]["b"] == 64);
  CHECK(j["spread"]["k"] == 1);
}

TEST_CASE("construct handles the ree cases") {
  auto r = run_cli("construct --family ree --q 3 --case ii");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["case"] == "ii");
  CHECK(j["u"] == 28);
  CHECK(j["k"] == 4);
  CHECK(j["lambda"] == 4);
  CHECK(j["components"] == json::array({84, 84, 84}));
}

TEST_CASE("construct splits the plane into line cliques") {
  auto r = run_cli("construct --family psl --d 3 --q 2");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["u"] == 7);
  CHECK(j["k"] == 3);
  CHECK(j["lambda"] == 1);
  CHECK(j["components"] == json::array({3, 3, 3, 3, 3, 3, 3}));
}

TEST_CASE("construct writes graph files") {
  const std::string prefix = "/tmp/fg_cli_plane";
  auto r = run_cli("construct --family psl --d 3 --q 2 --out " + prefix);
  REQUIRE(r.code == 0);
  std::ifstream dot(prefix + ".dot");
  REQUIRE(bool(dot));
  std::stringstream ss;
  ss << dot.rdbuf();
  CHECK(ss.str().find("graph") != std::string::npos);
  CHECK(ss.str().find("--") != std::string::npos);
  // 21 vertices of valency 2
  CHECK(nonblank_lines(prefix + ".edges") == 21);
  std::remove((prefix + ".dot").c_str());
  std::remove((prefix + ".edges").c_str());
}

TEST_CASE("analyze agrees with the built groups") {
  auto r = run_cli("analyze-agammal --q 9 --check");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["q"] == 9);
  CHECK(j["structures"].size() == 3);
  for (const auto& st : j["structures"])
    for (const auto& b : st["blocks"]) CHECK(b["size"].get<int>() >= 2);
}

TEST_CASE("survey matches its stored table") {
  auto r = run_cli("survey --p 5 --expected " +
                   std::string(FG_DATA_DIR) + "/pi_2_5.txt");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["p"] == 5);
  CHECK(j["classes"].size() == 6);
  CHECK(j["classes"][0]["order"] == 24);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("construct --q 8").code == 2);
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("construct --family nonsense --q 8").code == 2);
}

TEST_CASE("oversized instances exit with the budget code") {
  auto r = run_cli("construct --family suzuki --q 128");
  CHECK(r.code == 3);
}

TEST_CASE("bad input values exit with code one") {
  auto r = run_cli("construct --family ree --q 3");
  CHECK(r.code == 1);
  r = run_cli("construct --family psl --d 3 --q 2 --block-index 5");
  CHECK(r.code == 1);
}
