#include <doctest.h>

#include <climits>

#include "oracle.hpp"
#include "text.hpp"
#include "word.hpp"

using namespace kbu;

namespace {

FreeWord W(std::string_view s) { return parse_word(s); }

}  // namespace

TEST_CASE("delta and eps on negative arguments") {
  CHECK(delta(-3) == 1);
  CHECK(delta(-4) == 0);
  CHECK(delta(0) == 0);
  CHECK(eps(-1) == -1);
  CHECK(eps(2) == 1);
}

TEST_CASE("multiplication examples") {
  CHECK((U() * U(-1)).is_identity());
  CHECK(U() * V() == W("u v"));
  CHECK(W("u v") * W("v^-1 u") == W("u^2"));
  CHECK(w_mul(w_identity(), W("u v^3")) == W("u v^3"));
}

TEST_CASE("inverse and powers") {
  CHECK(w_inv(W("u v")) == W("v^-1 u^-1"));
  CHECK(w_inv(W("1")).is_identity());
  CHECK(w_inv(W("u^2 v^-3")) == W("v^3 u^-2"));
  CHECK(w_pow(U(), 3) == W("u^3"));
  CHECK(w_pow(W("u v"), -1) == W("v^-1 u^-1"));
  CHECK(w_pow(word_B(), 2) == W("u v u v^-1 u v u v^-1"));
  CHECK(w_pow(W("v u v^-1"), 5) == W("v u^5 v^-1"));
  CHECK(w_pow(W("u v"), 0).is_identity());
}

TEST_CASE("w_pow agrees with repeated multiplication") {
  oracle::Rand r(1);
  for (int c = 0; c < 300; ++c) {
    const oracle::Letters a = r.letters(10);
    const int64_t n = r.range(-7, 7);
    CHECK(oracle::to_letters(w_pow(oracle::from_letters(a), n)) == oracle::power(oracle::reduce(a), n));
  }
}

TEST_CASE("conjugates and commutators") {
  CHECK(w_conj(V(), word_B()) == word_Bkl(1, 0));
  CHECK(w_conj(U(), word_B()) == word_Bkl(0, 1));
  CHECK(w_conj(w_identity(), W("u v")) == W("u v"));
  CHECK(w_commutator(U(), U()).is_identity());
  CHECK(w_commutator(V(2), U()) == W("v^2 u v^-2 u^-1"));
  CHECK(w_commutator(U(), V()) == W("u v u^-1 v^-1"));
}

TEST_CASE("B and B_{k,l}") {
  CHECK(word_B() == W("u v u v^-1"));
  CHECK(w_inv(word_B()) == W("v u^-1 v^-1 u^-1"));
  CHECK(word_Bkl(0, 0) == word_B());
  CHECK(word_Bkl(1, 0) == W("v u v u v^-2"));
  CHECK(word_Bkl(0, -1) == W("v u v^-1 u"));
  for (int64_t k = -8; k <= 8; ++k)
    for (int64_t l = -8; l <= 8; ++l) {
      const oracle::Letters c = oracle::cat(oracle::v(k), oracle::u(l));
      CHECK(oracle::to_letters(word_Bkl(k, l)) == oracle::cat(oracle::cat(c, oracle::B()), oracle::inv(c)));
    }
}

TEST_CASE("reduction matches one-letter cancellation") {
  oracle::Rand r(7);
  for (int c = 0; c < 1000; ++c) {
    std::vector<Syllable> stream;
    oracle::Letters flat;
    const int64_t n = r.range(0, 64);
    for (int64_t i = 0; i < n; ++i) {
      const Syllable s{r.range(0, 1) ? Gen::U : Gen::V, r.range(-3, 3)};
      stream.push_back(s);
      const int g = s.gen == Gen::U ? 1 : 2;
      for (int64_t k = 0; k < (s.exp < 0 ? -s.exp : s.exp); ++k) flat.push_back(s.exp > 0 ? g : -g);
    }
    const FreeWord w = FreeWord::from_syllables(stream);
    REQUIRE(oracle::to_letters(w) == oracle::reduce(flat));
    CHECK(FreeWord::from_syllables(w.syllables()) == w);
    for (size_t i = 1; i < w.syllables().size(); ++i) {
      CHECK(w.syllables()[i].gen != w.syllables()[i - 1].gen);
      CHECK(w.syllables()[i].exp != 0);
    }
  }
}

TEST_CASE("group laws on all words of length <= 3") {
  std::vector<oracle::Letters> all{{}};
  for (size_t from = 0, len = 0; len < 3; ++len) {
    const size_t to = all.size();
    for (size_t i = from; i < to; ++i)
      for (int x : {1, -1, 2, -2}) {
        if (!all[i].empty() && all[i].back() == -x) continue;
        oracle::Letters w = all[i];
        w.push_back(x);
        all.push_back(w);
      }
    from = to;
  }
  CHECK(all.size() == 53);
  std::vector<FreeWord> words;
  for (const auto& l : all) words.push_back(oracle::from_letters(l));
  for (size_t i = 0; i < words.size(); ++i) {
    const auto& a = words[i];
    CHECK(a * w_inv(a) == FreeWord{});
    CHECK(w_identity() * a == a);
    for (size_t j = 0; j < words.size(); ++j) {
      const FreeWord ab = a * words[j];
      CHECK(oracle::to_letters(ab) == oracle::cat(all[i], all[j]));
      for (const auto& c : words) CHECK(ab * c == a * (words[j] * c));
    }
  }
}

TEST_CASE("apply_endo") {
  CHECK(apply_endo(U(), V(), W("u v^2 u^-1")) == W("u v^2 u^-1"));
  CHECK(apply_endo(U(-1), V(), W("u v")) == W("u^-1 v"));
  oracle::Rand r(3);
  for (int c = 0; c < 300; ++c) {
    const oracle::Letters iu = r.letters(4), iv = r.letters(4), w1 = r.letters(8), w2 = r.letters(8);
    const FreeWord fu = oracle::from_letters(iu), fv = oracle::from_letters(iv);
    const FreeWord f1 = oracle::from_letters(w1), f2 = oracle::from_letters(w2);
    CHECK(oracle::to_letters(apply_endo(fu, fv, f1)) == oracle::subst(iu, iv, w1));
    CHECK(apply_endo(fu, fv, f1 * f2) == apply_endo(fu, fv, f1) * apply_endo(fu, fv, f2));
  }
}

TEST_CASE("exponent overflow is reported, not wrapped") {
  CHECK_THROWS_AS(U(INT64_MAX) * U(1), OverflowError);
  CHECK_THROWS_AS(w_pow(U(INT64_MAX / 2 + 1), 2), OverflowError);
  CHECK(U(INT64_MAX) * U(-1) == U(INT64_MAX - 1));
}

TEST_CASE("ordering is a total order consistent with equality") {
  const FreeWord a = W("u v"), b = W("u v^2"), c = W("v");
  CHECK((a <=> a) == 0);
  CHECK(((a <=> b) < 0) != ((b <=> a) < 0));
  CHECK(((a <=> c) != 0));
}
