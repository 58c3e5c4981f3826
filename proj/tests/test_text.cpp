#include <doctest.h>

#include <functional>

#include <json.hpp>

#include "commands.hpp"
#include "oracle.hpp"
#include "text.hpp"

using namespace kbu;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("word grammar") {
  CHECK(parse_word("1").is_identity());
  CHECK(parse_word("u v^-1 u^3") == U() * V(-1) * U(3));
  CHECK(parse_word("  u   u  ") == U(2));
  CHECK(parse_word("B") == U() * V() * U() * V(-1));
  CHECK(parse_word("B^-2") == w_pow(word_B(), -2));
  CHECK(parse_word("u^+2") == U(2));
  CHECK(parse_word("u^0").is_identity());
  for (const char* bad : {"", "x", "u^", "u^a", "u v)", "1 u", "u^1.5", "u ^ -"})
    CHECK_MESSAGE(kind_of([&] { parse_word(bad); }) == ErrorKind::Parse, bad);
}

TEST_CASE("word formatting") {
  CHECK(format_word(FreeWord{}) == "1");
  CHECK(format_word(U() * V(-1) * U(3)) == "u v^-1 u^3");
  CHECK(format_word(parse_word("B")) == "u v u v^-1");
  oracle::Rand r(41);
  for (int c = 0; c < 300; ++c) {
    const FreeWord w = oracle::from_letters(r.letters(20));
    CHECK(parse_word(format_word(w)) == w);
  }
}

TEST_CASE("pi1k and p2 text") {
  CHECK(parse_pi1k("(3,-2)") == Pi1K{3, -2});
  CHECK(parse_pi1k(" ( 0 , 1 ) ") == Pi1K{0, 1});
  CHECK(format_pi1k({-1, 4}) == "(-1,4)");
  CHECK(kind_of([] { parse_pi1k("(1;2)"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_pi1k("(1,2"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_pi1k("(1,2) x"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_pi1k("(99999999999999999999,0)"); }) == ErrorKind::Parse);

  const P2Elem e = parse_p2("(u v^-1 B; 2, -1)");
  CHECK(e.w == U() * V(-1) * word_B());
  CHECK(e.q == Pi1K{2, -1});
  CHECK(format_p2(e) == "(u v^-1 u v u v^-1; 2, -1)");
  CHECK(format_p2(p2_identity()) == "(1; 0, 0)");
  CHECK(parse_p2(format_p2(e)) == e);
  CHECK(kind_of([] { parse_p2("(u; 1)"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_p2("u; 0, 0"); }) == ErrorKind::Parse);
}

TEST_CASE("B-basis text") {
  const BBasisWord w = BBasisWord::from_factors({{1, 0, 1}, {-2, 3, -2}});
  CHECK(format_bbasis(w) == "B[1,0] B[-2,3]^-2");
  CHECK(format_bbasis(BBasisWord{}) == "1");
  CHECK(parse_bbasis("B[1,0] B[-2,3]^-2") == w);
  CHECK(parse_bbasis("1").empty());
  CHECK(parse_bbasis("B[0,0] B[0,0]^-1").empty());
  CHECK(kind_of([] { parse_bbasis("B[1] "); }) == ErrorKind::Parse);
}

TEST_CASE("abelianization JSON") {
  const AbKerG x{{{1, -1}, 1}, {{0, 0}, -1}};
  const std::string s = format_abkerg_json(x);
  CHECK(s == R"([{"k":0,"l":0,"c":-1},{"k":1,"l":-1,"c":1}])");
  CHECK(parse_abkerg_json(s) == x);
  CHECK(format_abkerg_json(AbKerG{}) == "[]");
  CHECK(ordered_json::parse(s).dump() == s);
  CHECK(kind_of([] { parse_abkerg_json("{"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_abkerg_json(R"([{"k":0}])"); }) == ErrorKind::Parse);
}

TEST_CASE("eval") {
  CHECK(cmd_eval("lsigma (B; 0, 0)") == "(u v u v^-1; 0, 0)\n");
  CHECK(cmd_eval("mul (u; 0, 0) (u^-1; 0, 0)") == "(1; 0, 0)\n");
  CHECK(cmd_eval("theta[0,1] v") == "v u v u v^-1\n");
  CHECK(format_value(eval_expr("rho u")) == format_word(rho(U())));
  CHECK(format_value(eval_expr("mul (u) (v)")) == "u v");
  CHECK(kind_of([] { eval_expr("mul u v"); }) == ErrorKind::Parse);
  CHECK(format_value(eval_expr("mul u (v; 0, 1)")) == "(u v; 0, 1)");
  CHECK(format_value(eval_expr("inv (B; 0, 1)")) == "(u v u v^-1; 0, -1)");
  CHECK(format_value(eval_expr("lsigma u")) == format_p2(l_sigma({U(), {}})));
  CHECK(format_value(eval_expr("mul (u v) u")) == "u v u");
  CHECK(format_value(eval_expr("theta[2,-1] (inv B)")) == format_word(theta(2, -1, w_inv(word_B()))));
  CHECK(kind_of([] { eval_expr("rho (u; 0, 0)"); }) == ErrorKind::PreconditionFail);
  CHECK(kind_of([] { eval_expr("mul u"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { eval_expr("frob u"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { eval_expr("theta[1] u"); }) == ErrorKind::Parse);
}

TEST_CASE("classify report") {
  CHECK(cmd_classify("(0,0)", "(0,1)", false) ==
        "type: 3\nnormal_form: i=0 s1=0 s2=0\nconjugator: (0,0)\nborsuk_ulam: true\nreason: Type3\n");
  const json j = json::parse(cmd_classify("(2,2)", "(4,0)", true));
  CHECK(j["type"] == 4);
  CHECK(j["borsuk_ulam"] == false);
  CHECK(j["reason"] == "NotBU-Type4-ValuationFail");
  CHECK(j["normal_form"]["r1"] == 2);
  CHECK(j["conjugator"] == json::array({0, 0}));
  CHECK(kind_of([] { cmd_classify("(1,1)", "(1,0)", false); }) == ErrorKind::NonCommuting);
  CHECK(kind_of([] { cmd_classify("(1,1", "(1,0)", false); }) == ErrorKind::Parse);
}

TEST_CASE("witness report") {
  const json j = json::parse(cmd_witness("(0,1)", "(0,0)", true));
  CHECK(j["status"] == "Generated");
  CHECK(j["a"] == "(v; 0, 0)");
  CHECK(j["b"] == "(1; 0, 0)");
  CHECK(j["verified"] == true);
  CHECK(json::parse(cmd_witness("(0,0)", "(0,1)", true))["status"] == "NotApplicableBU");
  const json i1 = json::parse(cmd_witness("(1,1)", "(1,3)", true));
  CHECK(i1["status"] == "UnsupportedI1");
  CHECK(i1["a"].is_null());
  CHECK(i1["verified"] == false);
}

TEST_CASE("witnesses for arbitrary commuting pairs verify") {
  oracle::Rand r(42);
  int generated = 0;
  for (int c = 0; c < 300; ++c) {
    const HomPair h = HomNormalForm{HomType::T4, 0, r.range(0, 3), r.range(0, 3), r.range(0, 6), r.range(-6, 6)}.pair();
    const Pi1K x{r.range(-5, 5), r.range(-2, 2)};
    const std::string f10 = format_pi1k(k_conj(x, h.f10())), f01 = format_pi1k(k_conj(x, h.f01()));
    const json j = json::parse(cmd_witness(f10, f01, true));
    if (j["status"] != "Generated") continue;
    ++generated;
    CHECK(j["verified"] == true);
    const json v = json::parse(cmd_verify_witness(f10, f01, j["a"].get<std::string>(), j["b"].get<std::string>(), true));
    CHECK(v["certified"] == true);
  }
  CHECK(generated > 100);
}

TEST_CASE("verify-witness report") {
  CHECK(cmd_verify_witness("(0,1)", "(0,0)", "(v;0,0)", "(1;0,0)", false) ==
        "cond_i: true\ncond_ii: true\ncond_iii: true\ncertified: true\n");
  const json j = json::parse(cmd_verify_witness("(0,1)", "(0,0)", "(u;0,0)", "(1;0,0)", true));
  CHECK(j["certified"] == false);
}

TEST_CASE("rewrite and abelianize reports") {
  CHECK(cmd_rewrite("B") == "B[0,0]\n");
  CHECK(cmd_rewrite("v B v^-1") == "B[1,0]\n");
  CHECK(cmd_rewrite("1") == "1\n");
  CHECK(kind_of([] { cmd_rewrite("u"); }) == ErrorKind::NotInKernel);
  CHECK(cmd_abelianize("v B v^-1 B") == R"([{"k":0,"l":0,"c":1},{"k":1,"l":0,"c":1}])" "\n");
}

TEST_CASE("JSON reports round-trip") {
  for (const auto& s : {cmd_classify("(3,0)", "(-5,2)", true), cmd_witness("(2,2)", "(2,2)", true),
                        cmd_witness("(0,0)", "(0,1)", true), cmd_abelianize("B u B u^-1"),
                        cmd_verify_witness("(0,1)", "(0,0)", "(v;0,0)", "(1;0,0)", true)}) {
    std::string body = s;
    if (!body.empty() && body.back() == '\n') body.pop_back();
    CHECK(ordered_json::parse(body).dump() == body);
  }
}
