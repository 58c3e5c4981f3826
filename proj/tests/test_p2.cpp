#include <doctest.h>

#include "oracle.hpp"
#include "p2.hpp"
#include "text.hpp"

using namespace kbu;

namespace {

FreeWord W(std::string_view s) { return parse_word(s); }
P2Elem P(std::string_view s) { return parse_p2(s); }

P2Elem oracle_mul(const P2Elem& a, const P2Elem& b) {
  return {oracle::from_letters(oracle::cat(oracle::to_letters(a.w),
                                           oracle::theta(a.q.m, a.q.n, oracle::to_letters(b.w)))),
          oracle::kmul(a.q, b.q)};
}

P2Elem random_p2(oracle::Rand& r, int64_t len, int64_t bound) {
  return {oracle::from_letters(r.letters(len)), {r.range(-bound, bound), r.range(-bound, bound)}};
}

}  // namespace

TEST_CASE("theta examples") {
  CHECK(theta(0, 0, W("u v^2 u^-3")) == W("u v^2 u^-3"));
  CHECK(theta(1, 0, U()) == word_B() * U() * w_inv(word_B()));
  CHECK(theta(0, 1, V()) == V() * word_B());
}

TEST_CASE("theta agrees with letter substitution") {
  oracle::Rand r(5);
  for (int c = 0; c < 400; ++c) {
    const int64_t m = r.range(-4, 4), n = r.range(-4, 4);
    const oracle::Letters w = r.letters(10);
    CHECK(oracle::to_letters(theta(m, n, oracle::from_letters(w))) == oracle::theta(m, n, w));
  }
}

TEST_CASE("theta is an action that depends on n only through its parity") {
  oracle::Rand r(6);
  for (int c = 0; c < 400; ++c) {
    const Pi1K q1{r.range(-4, 4), r.range(-4, 4)}, q2{r.range(-4, 4), r.range(-4, 4)};
    const FreeWord w = oracle::from_letters(r.letters(10));
    CHECK(theta(q1, theta(q2, w)) == theta(oracle::kmul(q1, q2), w));
    CHECK(theta(q1.m, q1.n, w) == theta(q1.m, delta(q1.n), w));
  }
  for (int64_t m = -5; m <= 5; ++m)
    for (int64_t n = -5; n <= 5; ++n) CHECK(theta(m, n, word_B()) == w_pow(word_B(), eps(n)));
}

TEST_CASE("multiplication examples") {
  CHECK(P("(v; 0, 0)") * P("(v^-1 B; 0, 1)") == P("(B; 0, 1)"));
  CHECK(p2_identity() * P("(u v; 3, -2)") == P("(u v; 3, -2)"));
  CHECK(P("(B^-1; 1, 0)") * P("(u; 0, 0)") == P("(u B^-1; 1, 0)"));
  CHECK(p2_inv(p2_identity()) == p2_identity());
  CHECK(p2_inv(P("(u; 0, 0)")) == P("(u^-1; 0, 0)"));
  CHECK(p2_inv(P("(B; 0, 1)")) == P("(B; 0, -1)"));
  CHECK(P("(B; 0, 1)") * P("(B; 0, -1)") == p2_identity());
}

TEST_CASE("group laws against the letter-list model") {
  oracle::Rand r(8);
  for (int c = 0; c < 300; ++c) {
    const P2Elem a = random_p2(r, 6, 4), b = random_p2(r, 6, 4), d = random_p2(r, 6, 4);
    CHECK(a * b == oracle_mul(a, b));
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * p2_inv(a) == p2_identity());
    CHECK(p2_inv(a) * a == p2_identity());
    const int64_t t = r.range(-4, 4);
    P2Elem rep = p2_identity();
    for (int64_t i = 0; i < (t < 0 ? -t : t); ++i) rep = rep * (t < 0 ? p2_inv(a) : a);
    CHECK(p2_pow(a, t) == rep);
  }
}

TEST_CASE("sigma squared and projections") {
  CHECK(sigma_sq() == P("(u v u v^-1; 0, 0)"));
  CHECK(l_sigma(sigma_sq()) == sigma_sq());
  CHECK(p1_sharp(sigma_sq()) == Pi1K{});
  CHECK(p1_sharp(P("(u v; 2, -1)")) == Pi1K{2, -1});
}

TEST_CASE("rho examples") {
  CHECK(rho(U()) == word_B() * U(-1) * w_inv(word_B()));
  CHECK(rho(V()) == V(-1) * word_B());
  CHECK(rho(word_B()) == word_B());
}

TEST_CASE("l_sigma examples") {
  CHECK(l_sigma(P("(1; 3, 0)")) == P("(1; 3, 0)"));
  CHECK(l_sigma(P("(1; 0, 1)")) == P("(B; 0, 1)"));
  CHECK(l_sigma(P("(u^2; 0, 0)")) == P2Elem{w_pow(word_B() * U(-1), 2) * w_pow(word_B(), -2), {2, 0}});
}

TEST_CASE("l_sigma closed forms on powers of u and v") {
  for (int64_t r = -5; r <= 5; ++r) {
    CHECK(l_sigma({U(r), {}}) == P2Elem{w_pow(word_B() * U(-1), r) * w_pow(word_B(), -r), {r, 0}});
    CHECK(l_sigma({V(r), {}}) ==
          P2Elem{w_pow(U() * V(), -r) * w_pow(U() * word_B(), delta(r)), {0, r}});
  }
}

TEST_CASE("l_sigma is a homomorphism squaring to conjugation by sigma^2") {
  oracle::Rand r(9);
  const P2Elem s2 = sigma_sq();
  for (int c = 0; c < 300; ++c) {
    const P2Elem a = random_p2(r, 6, 4), b = random_p2(r, 6, 4);
    CHECK(l_sigma(a * b) == l_sigma(a) * l_sigma(b));
    CHECK(l_sigma(l_sigma(a)) == s2 * a * p2_inv(s2));
    CHECK(l_sigma({a.w, {}}) == P2Elem{rho(a.w), g_word(a.w)});
  }
}

TEST_CASE("rho cocycle, and homomorphism on ker g") {
  oracle::Rand r(10);
  for (int c = 0; c < 300; ++c) {
    const FreeWord w = oracle::from_letters(r.letters(8)), z = oracle::from_letters(r.letters(8));
    CHECK(rho(w * z) == rho(w) * theta(g_word(w), rho(z)));
    CHECK(rho(w_inv(w)) == theta(k_inv(g_word(w)), w_inv(rho(w))));
    const FreeWord x = w * word_Bkl(r.range(-3, 3), r.range(-3, 3)) * w_inv(w);
    CHECK(rho(x * z) == rho(x) * rho(z));
    CHECK(p1_sharp(l_sigma({x, {}})) == Pi1K{});
  }
}

TEST_CASE("split_normal") {
  SplitNormal s = split_normal(word_B());
  CHECK((s.r == 0 && s.s == 0 && s.x == word_B()));
  s = split_normal(U());
  CHECK((s.r == 1 && s.s == 0 && s.x.is_identity()));
  s = split_normal(W("v u"));
  CHECK((s.r == -1 && s.s == 1 && s.x == W("v^-1 u v u")));
  oracle::Rand r(12);
  for (int c = 0; c < 300; ++c) {
    const FreeWord w = oracle::from_letters(r.letters(12));
    s = split_normal(w);
    CHECK(g_word(s.x) == Pi1K{});
    CHECK(U(s.r) * V(s.s) * s.x == w);
  }
}
