#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "util.hpp"

namespace {

std::string cli_path() {
  const char* path = std::getenv("MSETTOP_CLI");
  REQUIRE(path != nullptr);
  return path;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) { return testutil::fixture_path(name); }

}  // namespace

TEST_CASE("validate exit codes and axiom message") {
  const RunResult good = run("validate " + fixture("example3_3.json"));
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("valid M-topology") != std::string::npos);

  const RunResult bad = run("validate " + fixture("broken_missing_empty.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("empty M-set absent") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 2") {
  const RunResult r = run("--budget 5 som list " + fixture("example3_3.json"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("bad literals exit 65") {
  CHECK(run("interior " + fixture("example3_3.json") + " '{9/z}'").exit_code == 65);
  CHECK(run("validate /nonexistent.json").exit_code == 65);
}

TEST_CASE("semi checks exit by verdict") {
  const std::string file = fixture("example3_3.json");
  CHECK(run("som check " + file + " '{2/a, 2/b}' --algorithm both").exit_code == 0);
  CHECK(run("som check " + file + " '{4/a}'").exit_code == 1);
  CHECK(run("scm check " + file + " '{4/a}'").exit_code == 0);
}

TEST_CASE("compact variants and exit codes") {
  const std::string file = fixture("example3_3.json");
  CHECK(run("compact " + file + " --variant semi").exit_code == 0);
  CHECK(run("compact " + file + " --variant semi_whole").exit_code == 1);
  CHECK(run("compact " + file + " --variant semi_partial_whole").exit_code == 0);
  const RunResult full = run("compact " + file + " --variant semi_full");
  CHECK(full.exit_code == 1);
  CHECK(full.output.find("{3/c}") != std::string::npos);
  CHECK(full.output.find("{5/a, 2/b}") != std::string::npos);
}

TEST_CASE("cover, subcover, fip") {
  const std::string file = fixture("example3_3.json");
  CHECK(run("cover check " + file + " '{5/a, 2/b}' '{3/c}'").exit_code == 0);
  CHECK(run("cover check " + file + " '{1/a, 2/b}' '{3/c}'").exit_code == 1);
  CHECK(run("subcover " + file + " --filter whole '{5/a, 2/b}' '{1/a, 2/b, 3/c}'").exit_code ==
        1);
  const RunResult sub =
      run("subcover " + file + " --filter partial_whole '{5/a, 2/b}' '{1/a, 2/b, 3/c}'");
  CHECK(sub.exit_code == 0);
  CHECK(sub.output.find("2 members") != std::string::npos);
  CHECK(run("fip " + file + " '{5/a, 2/b}' '{1/a, 2/b, 3/c}'").exit_code == 0);
  CHECK(run("fip " + file + " '{5/a, 2/b}' '{3/c}'").exit_code == 1);
}

TEST_CASE("verify and mine behave like batch jobs") {
  const RunResult verify = run("verify --claim T3.6 --corpus exhaustive --domain 2 --w 1");
  CHECK(verify.exit_code == 0);

  const RunResult unknown = run("verify --claim T9.9");
  CHECK(unknown.exit_code == 65);

  const RunResult mined =
      run("mine --remark 3.13 --corpus fixture --fixture " + fixture("example3_3.json"));
  CHECK(mined.exit_code == 0);
  CHECK(mined.output.find("{2/a, 2/b}") != std::string::npos);

  const RunResult exhausted =
      run("mine --remark 3.7 --corpus fixture --fixture " + fixture("example3_3.json"));
  CHECK(exhausted.exit_code == 1);

  const RunResult iff_ok =
      run("mine --remark 3.8 --corpus fixture --fixture " + fixture("example3_3.json"));
  CHECK(iff_ok.exit_code == 0);
}

TEST_CASE("json reports are byte-stable across runs") {
  const std::string args =
      "--output json verify --claim T3.12 --corpus random --domain 3 --w 3 --trials 20 "
      "--seed 99";
  const RunResult first = run(args);
  const RunResult second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("subspace output round-trips through validate") {
  const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                               "/msettop_subspace_roundtrip.json";
  const RunResult sub = run("--output json subspace " + fixture("example3_3.json") +
                            " '{1/a, 2/b, 3/c}' > " + out_path + "; cat " + out_path);
  CHECK(sub.exit_code == 0);
  const RunResult check = run("validate " + out_path);
  CHECK(check.exit_code == 0);
  std::remove(out_path.c_str());
}
