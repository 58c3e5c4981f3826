#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int code;
};

/// Runs the CLI through the shell; `args` is appended verbatim.
Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" KLEINBU_CLI "' " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int st = pclose(p);
  return {out, WIFEXITED(st) ? WEXITSTATUS(st) : -1};
}

}  // namespace

TEST_CASE("classify") {
  Run r = cli("classify --f10 '(0,0)' --f01 '(0,1)'");
  CHECK(r.code == 0);
  CHECK(r.out.find("type: 3") != std::string::npos);
  CHECK(r.out.find("borsuk_ulam: true") != std::string::npos);

  r = cli("classify --f10 '(2,2)' --f01 '(4,0)' --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["type"] == 4);
  CHECK(j["borsuk_ulam"] == false);
  CHECK(j["reason"] == "NotBU-Type4-ValuationFail");

  r = cli("classify --f10 '(1,1)' --f01 '(1,0)'");
  CHECK(r.code == 2);
  CHECK(r.out.rfind("error: ", 0) == 0);
}

TEST_CASE("witness") {
  Run r = cli("witness --f10 '(0,1)' --f01 '(0,0)'");
  CHECK(r.code == 0);
  CHECK(r.out.find("a: (v; 0, 0)") != std::string::npos);
  CHECK(r.out.find("b: (1; 0, 0)") != std::string::npos);
  CHECK(r.out.find("verified: true") != std::string::npos);
  CHECK(cli("witness --f10 '(0,0)' --f01 '(0,1)'").out.find("status: NotApplicableBU") != std::string::npos);
  CHECK(cli("witness --f10 '(1,1)' --f01 '(1,3)'").out.find("status: UnsupportedI1") != std::string::npos);
  CHECK(cli("witness --f10 '(1,1)' --f01 '(1,2)'").code == 2);
}

TEST_CASE("verify-witness") {
  Run r = cli("verify-witness --f10 '(1,0)' --f01 '(1,0)' --a '(u; 0, 0)' --b '(B^-1; 1, 0)'");
  CHECK(r.code == 0);
  CHECK(r.out.find("certified: true") != std::string::npos);
  r = cli("verify-witness --f10 '(1,0)' --f01 '(1,0)' --a '(u; 0, 0)' --b '(B; 1, 0)' --json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["cond_i"] == false);
  CHECK(cli("verify-witness --f10 '(1,0)' --f01 '(1,0)' --a '(u; 0' --b '(1;0,0)'").code == 1);
}

TEST_CASE("rewrite, abelianize, eval") {
  CHECK(cli("rewrite B").out == "B[0,0]\n");
  CHECK(cli("rewrite 'v B v^-1'").out == "B[1,0]\n");
  Run r = cli("rewrite u");
  CHECK(r.code == 2);
  CHECK(r.out.find("g=(1,0)") != std::string::npos);
  CHECK(cli("rewrite 'u^'").code == 1);
  r = cli("abelianize 'v B v^-1 B'");
  CHECK(r.code == 0);
  CHECK(nlohmann::ordered_json::parse(r.out).dump() + "\n" == r.out);
  CHECK(cli("eval 'lsigma (B; 0, 0)'").out == "(u v u v^-1; 0, 0)\n");
  CHECK(cli("eval 'mul (u; 0, 0) (u^-1; 0, 0)'").out == "(1; 0, 0)\n");
  CHECK(cli("eval 'theta[0,1] v'").out == "v u v u v^-1\n");
  CHECK(cli("eval 'mul (u'").code == 1);
  CHECK(cli("eval 'rho (u; 0, 0)'").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(cli("").code == 1);
  CHECK(cli("frobnicate").code == 1);
  CHECK(cli("classify --f10 '(0,0)'").code == 1);
  CHECK(cli("selftest --cases 0").code == 1);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("selftest") {
  Run r = cli("selftest --seed 7 --cases 100");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("seed 7, 100 cases\n", 0) == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = cli("selftest --cases 100 --mutant");
  CHECK(r.code == 3);
  CHECK(r.out.find("FAIL") != std::string::npos);

  CHECK(cli("selftest --cases 50").out.rfind("seed 42,", 0) == 0);
  CHECK(cli("selftest --cases 50", "KLEIN_BU_SEED=5").out.rfind("seed 5,", 0) == 0);
  CHECK(cli("selftest --cases 50 --seed 6", "KLEIN_BU_SEED=5").out.rfind("seed 6,", 0) == 0);
  CHECK(cli("selftest --cases 50", "KLEIN_BU_SEED=abc").code == 1);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"selftest --seed 11 --cases 100", "witness --f10 '(6,2)' --f01 '(-3,0)' --json",
                           "classify --f10 '(3,-4)' --f01 '(-5,2)'"}) {
    const Run a = cli(args), b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
