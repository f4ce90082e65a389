#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("'") + IVPOLY_CLI_PATH + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(status != -1);
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = out;
  return r;
}

std::string strip_duration(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (line.find("duration") == std::string::npos) {
      out += line;
      out += '\n';
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("membership queries by target string") {
  CHECK(run_cli("member 'C(X,2)' int").exit_code == 0);

  RunResult r = run_cli("member 'C(X,2)' int-mod:2");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("non-member") != std::string::npos);

  CHECK(run_cli("member 'X + (C(X,2))*rho1' 'ext:[2]'").exit_code == 0);
  CHECK(run_cli("member '2*C(X,2)' int-k:1").exit_code == 0);
  CHECK(run_cli("member 'C(X,3)' 'int-multiset:[0,2]'").exit_code == 1);
}

TEST_CASE("membership through value flags") {
  CHECK(run_cli("member 'C(X,2)' int-mod --modulus 2").exit_code == 1);
  CHECK(run_cli("member 'C(X,2)' int-mod:2 --modulus 3").exit_code == 2);
  CHECK(run_cli("member 'X + (C(X,2))*rho1' ext --relations '[2]'")
            .exit_code == 0);
}

TEST_CASE("idealization targets") {
  CHECK(run_cli("member '(2*C(X,2) ; C(X,2))' idealization:Z,0").exit_code ==
        0);
  CHECK(run_cli("member '(C(X,2) ; 0) over Z(+)Z/3' idealization:0")
            .exit_code == 0);
  CHECK(run_cli("member '(C(X,2) ; 0)' idealization:Z/2,0").exit_code == 1);
  // module named both in the expression and the target
  CHECK(run_cli("member '(X ; 1) over Z(+)Z/3' idealization:Z/2,0")
            .exit_code == 2);
}

TEST_CASE("basis pivots and conjecture") {
  RunResult r = run_cli("basis mod:3 -D 6 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["result"]["pivots"] ==
        json::array({"1", "1", "1", "3", "3", "3", "3"}));

  r = run_cli("basis mod:1 -D 4 --format json");
  REQUIRE(r.exit_code == 0);
  doc = json::parse(r.output);
  CHECK(doc["result"]["pivots"] == json::array({"1", "1", "1", "1", "1"}));

  r = run_cli("basis mod:4 -D 12 --conjecture --format json");
  REQUIRE(r.exit_code == 0);
  doc = json::parse(r.output);
  CHECK(doc["result"]["conjecture"]["verdict"] == "EQUAL");

  CHECK(run_cli("basis diff:1 -D 4").exit_code == 0);
}

TEST_CASE("verify runs and reproduces") {
  RunResult r = run_cli("verify core --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["result"]["pass"] == true);

  RunResult a = run_cli("verify section5 --format json");
  RunResult b = run_cli("verify section5 --format json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(strip_duration(a.output) == strip_duration(b.output));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("member 'C(X,2)' int-foo").exit_code == 2);
  CHECK(run_cli("member '1/2 X' int").exit_code == 2);
  CHECK(run_cli("basis mod:3 -D 100").exit_code == 2);
  CHECK(run_cli("verify section9").exit_code == 2);
  CHECK(run_cli("member 'C(X,2)' int --modulus 5").exit_code == 2);
  CHECK(run_cli("basis novelty:3 -D 4").exit_code == 2);
}

TEST_CASE("help and version") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--version").exit_code == 0);
  RunResult r = run_cli("member --help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("target") != std::string::npos);
}
