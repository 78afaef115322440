#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(BDCLUSTER_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("cli: build-seed") {
  Run r = run("build-seed --n 4 --alpha 1 --beta 3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"] == 15);
  CHECK(j["frozen"] == 4);
  CHECK(j["mutable"] == 11);
}

TEST_CASE("cli: verify rank on the non-canonical form") {
  Run r = run("verify rank --n 3 --alpha 2 --beta 1");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "bdcluster.report/1");
  CHECK(j["input"]["alpha"] == 2);
  CHECK(j["triple"]["alpha"] == 1);
  CHECK(j["triple"]["beta"] == 2);
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["name"] == "rank");
  CHECK(j["checks"][0]["details"]["rank"] == 6);
  CHECK(j["ok"] == true);
}

TEST_CASE("cli: compat report uses exact rationals") {
  Run r = run("verify compat --n 3 --alpha 1 --beta 2 --r0-samples 2");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["options"]["r0_samples"] == 2);
  const auto& runs = j["checks"][0]["details"]["runs"];
  CHECK(runs.size() == 3);
  for (const auto& run : runs) {
    CHECK(run["ok"] == true);
    for (const auto& row : run["r0"])
      for (const auto& e : row) CHECK(e.is_string());
  }
}

TEST_CASE("cli: exit codes") {
  CHECK(run("build-seed --n 4 --alpha 1 --beta 1").code == 2);
  CHECK(run("build-seed --n 4 --alpha 1").code == 2);
  CHECK(run("frobnicate --n 4 --alpha 1 --beta 2").code == 2);
  CHECK(run("mutate --at 1,2 --n 4 --alpha 1 --beta 2").code == 2);
  CHECK(run("mutate --at 9,9 --n 4 --alpha 1 --beta 2").code == 2);
  CHECK(run("mutate --at 2,2 --n 4 --alpha 1 --beta 2").code == 0);
  CHECK(run("run-sequence S --n 5 --alpha 1 --beta 4").code == 2);
  CHECK(run("verify membership --n 3 --alpha 1 --beta 2").code == 1);
}

TEST_CASE("cli: mutate changes the exported seed") {
  Run base = run("build-seed --n 4 --alpha 1 --beta 2");
  Run once = run("mutate --at 2,2 --n 4 --alpha 1 --beta 2");
  REQUIRE(once.code == 0);
  CHECK(once.out != base.out);
}

TEST_CASE("cli: DOT export") {
  Run r = run("export --dot --n 5 --alpha 2 --beta 3");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(count(r.out, "shape=box") == 6);
  CHECK(count(r.out, "shape=circle") == 18);
  CHECK(count(r.out, "style=dashed") == 6);
}

TEST_CASE("cli: verify all is sorted and reproducible") {
  Run a = run("verify all --n 4 --alpha 1 --beta 2");
  Run b = run("verify all --n 4 --alpha 1 --beta 2");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) names.push_back(c["name"]);
  CHECK(names == std::vector<std::string>{"compat", "laurent", "membership", "rank", "sequences", "toric"});
  CHECK(j["ok"] == true);
}
