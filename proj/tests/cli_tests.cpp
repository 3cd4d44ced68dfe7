// Drives the installed command-line binary end to end: exit codes, report
// shape, and byte stability.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("turan2d_cli_" + std::to_string(counter++) + ".out");
  std::string cmd = std::string(TURAN2D_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  fs::remove(out);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, ss.str()};
}

}  // namespace

TEST_CASE("m2 subcommand") {
  RunResult c5 = run_cli("construct --spec cycle:n=5 --format g6");
  REQUIRE(c5.exit_code == 0);
  std::string g6 = c5.stdout_text.substr(0, c5.stdout_text.find('\n'));
  RunResult m2r = run_cli("m2 --g6 '" + g6 + "'");
  CHECK(m2r.exit_code == 0);
  CHECK(m2r.stdout_text.find("\"m2\": \"4/3\"") != std::string::npos);
}

TEST_CASE("m2 rejects graphs below 3 vertices with a usage error") {
  RunResult r = run_cli("m2 --g6 A_");
  CHECK(r.exit_code == 2);
}

TEST_CASE("search-m2 reports the exact value") {
  RunResult r = run_cli("search-m2 --m 7 --r 3");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"value\": \"2/1\"") != std::string::npos);
  CHECK(r.stdout_text.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("verify exit codes distinguish pass from counterexample") {
  RunResult ok = run_cli("verify equivalence-7-3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.stdout_text.find("\"passed\": true") != std::string::npos);

  RunResult bad = run_cli("verify equivalence-7-3 --mutated");
  CHECK(bad.exit_code == 1);

  RunResult unknown = run_cli("verify no-such-check");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("search-m2 --m 7").exit_code == 2);       // missing --r
  CHECK(run_cli("no-such-subcommand").exit_code == 2);
  CHECK(run_cli("m2 --g6 '#bad'").exit_code == 2);
  CHECK(run_cli("search-edges --m 5 --r 3 --cap x").exit_code == 2);
}

TEST_CASE("reports are byte-stable across runs and worker counts") {
  RunResult a = run_cli("search-m2 --m 6 --r 3 --jobs 1");
  RunResult b = run_cli("search-m2 --m 6 --r 3 --jobs 1");
  RunResult c = run_cli("search-m2 --m 6 --r 3 --jobs 4");
  CHECK(a.stdout_text == b.stdout_text);
  CHECK(a.stdout_text == c.stdout_text);

  RunResult e1 = run_cli("experiment --m 5 --r 3 --n 16,24 --reps 4 --seed 9 --jobs 1");
  RunResult e2 = run_cli("experiment --m 5 --r 3 --n 16,24 --reps 4 --seed 9 --jobs 4");
  CHECK(e1.stdout_text == e2.stdout_text);
}

TEST_CASE("sample and experiment formats") {
  RunResult g6 = run_cli("sample --n 50 --m 5 --r 3 --seed 7 --format g6");
  CHECK(g6.exit_code == 0);
  CHECK(!g6.stdout_text.empty());

  RunResult again = run_cli("sample --n 50 --m 5 --r 3 --seed 7 --format g6");
  CHECK(g6.stdout_text == again.stdout_text);

  RunResult csv = run_cli("experiment --m 5 --r 3 --n 16 --reps 3 --seed 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.stdout_text.rfind("n,rep,accepted,alpha,predicted_scale", 0) == 0);

  RunResult json = run_cli("sample --n 50 --m 5 --r 3 --seed 7");
  CHECK(json.stdout_text.find("\"p\":") != std::string::npos);
}

TEST_CASE("construct emits graph6 and json") {
  RunResult r = run_cli("construct --spec odd-optimal:k=5");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"vertices\": 9") != std::string::npos);
  CHECK(r.stdout_text.find("\"edges\": 19") != std::string::npos);
  CHECK(r.stdout_text.find("\"8/3\"") != std::string::npos);

  CHECK(run_cli("construct --spec bogus:1").exit_code == 2);
}

TEST_CASE("enumerate stream and cache environment variable") {
  RunResult r = run_cli("enumerate --m 5 --r 3 --format g6");
  CHECK(r.exit_code == 0);
  int lines = 0;
  for (char ch : r.stdout_text)
    if (ch == '\n') ++lines;
  CHECK(lines == 14);

  RunResult inv = run_cli("invariants --g6 '" +
                          r.stdout_text.substr(0, r.stdout_text.find('\n')) + "'");
  CHECK(inv.exit_code == 0);
  CHECK(inv.stdout_text.find("\"alpha\":") != std::string::npos);
}
