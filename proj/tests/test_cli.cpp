#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "padm/certio.hpp"
#include "padm/cli.hpp"

using namespace padm;

namespace {

std::string data_dir() {
  const char* d = std::getenv("PADM_TEST_DATA");
  REQUIRE(d != nullptr);
  return d;
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream is(text);
  std::string l;
  while (std::getline(is, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("check on the sl_4 pair") {
  CliResult r = run({"check", "--spec", data_dir() + "/sl4_pair.spec"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "admissible grading: yes"));
  CHECK(has_line(r.out, "good grading: no"));
  CHECK(has_line(r.out, "b-optimal (b = 1): yes"));
  for (const char* c : {"A1", "A2", "A3", "A4", "A5", "A6"})
    CHECK(r.out.find(std::string(c) + " (") != std::string::npos);
  CHECK(has_line(r.out, "pair admissible: PASS"));
  CHECK(has_line(r.out, "overall: PASS"));
}

TEST_CASE("check localizes the A4 failure") {
  CliResult r = run({"check", "--spec", data_dir() + "/sl4_pair_bad.spec"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "A4 (n meets g^e trivially): FAIL"));
  CHECK(has_line(r.out, "overall: FAIL"));
}

TEST_CASE("check on the good sl_3 grading") {
  CliResult r = run({"check", "--spec", data_dir() + "/sl3_good.spec"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "good grading: yes"));
  CHECK(has_line(r.out, "pair admissible: PASS"));
}

TEST_CASE("malformed input exits 2") {
  CliResult r = run({"check", "--spec", data_dir() + "/malformed.spec"});
  CHECK(r.code == 2);
  CHECK(r.err.find("input error") != std::string::npos);
}

TEST_CASE("missing subcommand or flags exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("construct on the Dynkin spec emits the optimal pair") {
  CliResult r = run({"construct", "--spec", data_dir() + "/dynkin22.spec"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "constructed pair: dim m = 4, dim n = 4"));
  CHECK(has_line(r.out, "overall: PASS"));
}

TEST_CASE("construct --optimal reports the obstruction on the sl_11 spec") {
  CliResult r = run({"construct", "--spec", data_dir() + "/sl11.spec", "--optimal"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "optimal pair: no"));
  CHECK(r.out.find("forced full in n") != std::string::npos);
}

TEST_CASE("construct --optimal certifies a pair on the sl_4 input") {
  CliResult r = run({"construct", "--spec", data_dir() + "/sl4_pair.spec", "--optimal"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "optimal pair: yes"));
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* sub : {"check", "construct", "connect", "chain"}) {
    CliResult r1 = run({sub, "--spec", data_dir() + "/sl4_pair.spec"});
    CliResult r2 = run({sub, "--spec", data_dir() + "/sl4_pair.spec"});
    CAPTURE(sub);
    CHECK(r1.code == r2.code);
    CHECK(r1.out == r2.out);
  }
}

TEST_CASE("connect emits a verifiable certificate") {
  std::string path = std::string("/tmp/padm_test_connect_cert.txt");
  CliResult r = run({"connect", "--spec", data_dir() + "/sl11.spec", "--out", path});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "breakpoints: 3/7 3/4"));
  CHECK(has_line(r.out, "chain: 0 3/14 3/7 33/56 3/4 7/8 1"));
  CHECK(has_line(r.out, "steps: 6"));
  CHECK(has_line(r.out, "overall: PASS"));

  CliResult v = run({"verify", "--verify", path});
  CHECK(v.code == 0);
  CHECK(has_line(v.out, "kind: connectivity"));
  CHECK(has_line(v.out, "steps checked: 6"));
  CHECK(has_line(v.out, "overall: PASS"));

  SUBCASE("tampered certificates fail verification") {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t pos = text.find("\nm: ") + 1;
    REQUIRE(pos != std::string::npos + 1);
    size_t line_end = text.find('\n', pos);
    text.replace(pos, line_end - pos, "m: (1,2)=1");
    std::string bad = "/tmp/padm_test_connect_bad.txt";
    std::ofstream(bad) << text;
    CliResult b = run({"verify", "--verify", bad});
    CHECK(b.code == 1);
    CHECK(has_line(b.out, "overall: FAIL"));
  }
}

TEST_CASE("chain emits a verifiable certificate") {
  std::string path = std::string("/tmp/padm_test_chain_cert.txt");
  CliResult r = run({"chain", "--spec", data_dir() + "/sl4_pair.spec", "--out", path});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "mode: b-optimal (b = 1)"));
  CHECK(has_line(r.out, "verified: yes"));

  CliResult v = run({"verify", "--verify", path});
  CHECK(v.code == 0);
  CHECK(has_line(v.out, "kind: chain"));
  CHECK(has_line(v.out, "overall: PASS"));
}

TEST_CASE("chain accepts an explicit b") {
  CliResult r = run({"chain", "--spec", data_dir() + "/sl4_pair.spec", "--b", "1"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "mode: b-optimal (b = 1)"));
}

TEST_CASE("orthogonal and symplectic inputs work end to end") {
  CliResult r = run({"check", "--spec", data_dir() + "/so9_twolevel.spec"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "admissible grading: yes"));

  std::string path = "/tmp/padm_test_so9_chain.txt";
  CliResult c = run({"chain", "--spec", data_dir() + "/so9_twolevel.spec", "--out", path});
  CHECK(c.code == 0);
  CHECK(has_line(c.out, "mode: two-level (b = 2/3)"));
  CHECK(has_line(c.out, "verified: yes"));
  CliResult v = run({"verify", "--verify", path});
  CHECK(v.code == 0);

  CliResult sp = run({"construct", "--spec", data_dir() + "/sp6_dynkin.spec"});
  CHECK(sp.code == 0);
  CHECK(has_line(sp.out, "constructed pair: dim m = 8, dim n = 8"));
}

TEST_CASE("classify") {
  CliResult r = run({"classify", "--algebra", "sl 8", "--partition", "4 4"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "rank: 1"));
  CHECK(has_line(r.out, "triple centralizer: sl2"));

  CliResult r2 = run({"classify", "--algebra", "sl 6", "--partition", "6"});
  CHECK(r2.code == 0);
  CHECK(has_line(r2.out, "rank: 0"));

  CliResult r3 = run({"classify", "--algebra", "so 12", "--partition", "5 3 3 1"});
  CHECK(r3.code == 0);
  CHECK(has_line(r3.out, "rank: 1"));

  CliResult r4 = run({"classify", "--exceptional"});
  CHECK(r4.code == 0);
  CHECK(r4.out.find("G2 A_1 [1 0] dim 6") != std::string::npos);
  CHECK(r4.out.find("F4 C_3 [1 0 1 2] dim 36") != std::string::npos);
  CHECK(r4.out.find("E6 D_5 [2 0 2 0 2 2] dim 68") != std::string::npos);

  CliResult r5 = run({"classify", "--algebra", "so 6", "--partition", "4 2"});
  CHECK(r5.code == 2);
}
