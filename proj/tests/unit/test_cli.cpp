// Golden tests of the command-line driver: exact JSON bytes, determinism
// across runs, and the exit-code contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>

namespace {

const std::string cli = ARTIN_CLI_PATH;
const std::string data = ARTIN_TEST_DATA_DIR;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string command = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("hilbert golden output") {
  const RunResult r = run("hilbert " + data + "/perazzo_B.alg");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\n  \"hilbert\": [\n    1,\n    5,\n    5,\n    1\n  ]\n}\n");
}

TEST_CASE("dominance and conjugate and cg-tensor golden output") {
  CHECK(run("dominance \"2,2,1,1\" \"3,2,1\"").out == "{\n  \"verdict\": \"LT\"\n}\n");
  CHECK(run("dominance \"3,3,3\" \"4,2,2,1\"").out ==
        "{\n  \"verdict\": \"INCOMPARABLE\"\n}\n");
  const RunResult conj = run("conjugate \"4,2\"");
  CHECK(conj.out.find("[\n    2,\n    2,\n    1,\n    1\n  ]") != std::string::npos);
  const RunResult cg = run("cg-tensor \"2\" \"4,2,2,2,1,1\"");
  CHECK(cg.exit_code == 0);
  CHECK(nlohmann::json::parse(cg.out)["partition"] ==
        nlohmann::json::parse("[5,3,3,3,3,2,2,1,1,1]"));
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string cmd = "generic-jordan " + data + "/perazzo_B.alg --samples 5 --seed 42";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  // a different seed may pick a different witness
  const RunResult c = run("generic-jordan " + data + "/perazzo_B.alg --samples 5 --seed 7");
  CHECK(nlohmann::json::parse(c.out)["partition"] ==
        nlohmann::json::parse(a.out)["partition"]);
}

TEST_CASE("jordan subcommand reports SLJT verdicts") {
  const RunResult r = run("jordan " + data + "/g333_A.alg --element \"b+c\"");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["partition"] == nlohmann::json::parse("[7,2]"));
  CHECK(j["verdict"] == "SLJT");
}

TEST_CASE("verify-ext and theorem-check succeed on the Perazzo triple") {
  const RunResult v = run("verify-ext " + data + "/perazzo.triple");
  CHECK(v.exit_code == 0);
  CHECK(nlohmann::json::parse(v.out)["verdict"] == true);
  const RunResult t = run("theorem-check " + data + "/perazzo.triple --seed 0");
  CHECK(t.exit_code == 0);
  const auto j = nlohmann::json::parse(t.out);
  CHECK(j["verdict"] == "GT");
  CHECK(j["report"]["p_c"] == nlohmann::json::parse("[5,3,3,3,3,3,1,1,1,1]"));
  CHECK(j["report"]["p_tensor"] == nlohmann::json::parse("[5,3,3,3,3,2,2,1,1,1]"));
}

TEST_CASE("deform verifies both diagrams") {
  const RunResult r = run("deform " + data +
                          "/perazzo.triple --ellA t --ellB \"x+2y+3z+5u+7v\" --ts 1,2,-1,3");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == true);
  CHECK(j["report"]["diagram_zero"] == true);
  CHECK(j["report"]["p_L0"] == nlohmann::json::parse("[5,3,3,3,3,2,2,1,1,1]"));
}

TEST_CASE("dual-ext and valid-g") {
  const RunResult d =
      run("dual-ext " + data + "/perazzo_B.alg --m 1 --g \"X^[2]*U*V + X*Y*V^[2]\"");
  CHECK(d.exit_code == 0);
  CHECK(nlohmann::json::parse(d.out)["hilbert"] == nlohmann::json::parse("[1,6,10,6,1]"));
  const RunResult g = run("valid-g " + data + "/perazzo_B.alg --m 1");
  CHECK(g.exit_code == 0);
  CHECK(nlohmann::json::parse(g.out)["report"]["dimension"] == 25);
}

TEST_CASE("height-two quotients certify as strong Lefschetz") {
  const RunResult r = run("lefschetz " + data + "/kxy_h2.alg --mode sl");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == true);
  CHECK(j["report"]["sampled"] == nlohmann::json::parse("[4,2]"));
}

TEST_CASE("coinv presets") {
  const RunResult r = run("coinv g-r-1-n --r 2 --n 2");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["hilbert"] == nlohmann::json::parse("[1,2,2,2,1]"));
  const RunResult g = run("coinv g333");
  CHECK(g.exit_code == 0);
  CHECK(nlohmann::json::parse(g.out)["verdict"] == true);
}

TEST_CASE("exit codes: 1 parse, 2 math precondition") {
  CHECK(run("hilbert /does/not/exist.alg").exit_code == 1);
  CHECK(run("dominance \"2,1\" \"oops\"").exit_code == 1);
  CHECK(run("nonsense-command").exit_code == 1);

  const RunResult cg = run("cg-tensor \"5\" \"4\" --char 3");
  CHECK(cg.exit_code == 2);
  CHECK(nlohmann::json::parse(cg.out)["error"]["type"] == "CharTooSmall");

  const RunResult bad_g = run("dual-ext " + data + "/perazzo_B.alg --m 1 --g \"X^[4]\"");
  CHECK(bad_g.exit_code == 2);
  const auto j = nlohmann::json::parse(bad_g.out);
  CHECK(j["error"]["type"] == "ConditionFails");
  CHECK(j["error"]["witness"].contains("f"));

  // dominance across different totals is a math precondition failure
  CHECK(run("dominance \"2,2\" \"3,2,1\"").exit_code == 2);
}
