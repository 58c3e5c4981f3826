#include "selftest.hpp"

#include <cstdio>
#include <functional>
#include <future>
#include <random>

#include "buc.hpp"
#include "text.hpp"

namespace kbu {

namespace {

// Draws by modulo so that a seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(g_() % static_cast<uint64_t>(hi - lo + 1));
  }
  int64_t nonzero(int64_t bound) {
    const int64_t e = range(1, bound);
    return coin() ? e : -e;
  }
  bool coin() { return (g_() >> 17) & 1; }

 private:
  std::mt19937_64 g_;
};

FreeWord random_word(Rng& r, int64_t max_syllables, int64_t max_exp = 3) {
  std::vector<Syllable> s;
  const int64_t n = r.range(0, max_syllables);
  for (int64_t i = 0; i < n; ++i) s.push_back({r.coin() ? Gen::U : Gen::V, r.nonzero(max_exp)});
  return FreeWord::from_syllables(s);
}

BBasisWord random_bbasis(Rng& r, int64_t bound, int64_t max_factors) {
  std::vector<BFactor> f;
  const int64_t n = r.range(0, max_factors);
  for (int64_t i = 0; i < n; ++i) f.push_back({r.range(-bound, bound), r.range(-bound, bound), r.coin() ? 1 : -1});
  return BBasisWord::from_factors(f);
}

Pi1K random_pi1k(Rng& r, int64_t bound) { return {r.range(-bound, bound), r.range(-bound, bound)}; }

P2Elem random_p2(Rng& r, int64_t max_syllables, int64_t bound) {
  return {random_word(r, max_syllables, 2), random_pi1k(r, bound)};
}

std::string str(const Pi1K& q) { return format_pi1k(q); }
std::string str(const P2Elem& e) { return format_p2(e); }
std::string str(const HomNormalForm& nf) {
  return "type=" + std::to_string(static_cast<int>(nf.type)) + " i=" + std::to_string(nf.i) +
         " s1=" + std::to_string(nf.s1) + " s2=" + std::to_string(nf.s2) +
         " r1=" + std::to_string(nf.r1) + " r2=" + std::to_string(nf.r2);
}

class Suite {
 public:
  explicit Suite(std::string name) { rep_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++rep_.checks;
    if (!ok) record(describe());
  }

  /// Property over words; a failing input is shrunk syllable by syllable
  /// before it is reported.
  template <class P>
  void check_words(const std::string& prop, std::vector<FreeWord> ws, const std::string& params,
                   P pred) {
    ++rep_.checks;
    std::string thrown;
    try {
      if (pred(ws)) return;
    } catch (const Error& e) {
      thrown = std::string(" threw: ") + e.what();
    }
    if (thrown.empty()) ws = shrink(std::move(ws), pred);
    std::string d = prop + ":" + params;
    for (size_t i = 0; i < ws.size(); ++i) d += " w" + std::to_string(i) + "=" + format_word(ws[i]);
    record(d + thrown);
  }

  SuiteReport take() { return std::move(rep_); }

 private:
  void record(std::string d) {
    ++rep_.failures;
    if (rep_.counterexample.empty() || d.size() < rep_.counterexample.size()) {
      rep_.counterexample = std::move(d);
    }
  }

  template <class P>
  static std::vector<FreeWord> shrink(std::vector<FreeWord> ws, P& pred) {
    auto fails = [&](const std::vector<FreeWord>& c) {
      try {
        return !pred(c);
      } catch (const Error&) {
        return false;
      }
    };
    for (int budget = 0; budget < 20000;) {
      bool progressed = false;
      for (size_t i = 0; !progressed && i < ws.size(); ++i) {
        const std::vector<Syllable> syl(ws[i].syllables().begin(), ws[i].syllables().end());
        for (size_t j = 0; !progressed && j < syl.size(); ++j) {
          for (int mode = 0; !progressed && mode < 2; ++mode) {
            std::vector<Syllable> c = syl;
            if (mode == 0) {
              c.erase(c.begin() + static_cast<std::ptrdiff_t>(j));
            } else if (c[j].exp == 1 || c[j].exp == -1) {
              continue;
            } else {
              c[j].exp -= sgn(c[j].exp);
            }
            auto cand = ws;
            cand[i] = FreeWord::from_syllables(c);
            ++budget;
            if (fails(cand)) {
              ws = std::move(cand);
              progressed = true;
            }
          }
        }
      }
      if (!progressed) break;
    }
    return ws;
  }

  SuiteReport rep_;
};

// ---------------------------------------------------------------------------
// word

std::vector<int> letters(const FreeWord& w) {
  std::vector<int> out;  // +-1 for u, +-2 for v
  for (const auto& s : w.syllables()) {
    const int g = s.gen == Gen::U ? 1 : 2;
    for (int64_t i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) out.push_back(s.exp > 0 ? g : -g);
  }
  return out;
}

SuiteReport suite_word(const SelftestConfig& cfg, Rng r) {
  Suite s("word");
  for (int64_t c = 0; c < cfg.cases; ++c) {
    std::vector<Syllable> stream;
    std::vector<int> naive;
    const int64_t n = r.range(0, cfg.word_len);
    for (int64_t i = 0; i < n; ++i) {
      const Syllable syl{r.coin() ? Gen::U : Gen::V, r.nonzero(3)};
      stream.push_back(syl);
      const int g = syl.gen == Gen::U ? 1 : 2;
      for (int64_t k = 0; k < (syl.exp > 0 ? syl.exp : -syl.exp); ++k) {
        const int x = syl.exp > 0 ? g : -g;
        if (!naive.empty() && naive.back() == -x) naive.pop_back();
        else naive.push_back(x);
      }
    }
    const FreeWord w = FreeWord::from_syllables(stream);
    s.check(letters(w) == naive, [&] { return "reduction disagrees with letter cancellation: " + format_word(w); });
    s.check(FreeWord::from_syllables(w.syllables()) == w, [&] { return "reduction not idempotent: " + format_word(w); });

    const int64_t len = std::max<int64_t>(1, cfg.word_len / 4);
    s.check_words("associativity", {random_word(r, len), random_word(r, len), random_word(r, len)}, "",
                  [](const auto& v) { return (v[0] * v[1]) * v[2] == v[0] * (v[1] * v[2]); });
    s.check_words("inverse", {random_word(r, len)}, "", [](const auto& v) {
      return (v[0] * w_inv(v[0])).is_identity() && (w_inv(v[0]) * v[0]).is_identity();
    });
    s.check_words("apply_endo homomorphism",
                  {random_word(r, 3), random_word(r, 3), random_word(r, 6), random_word(r, 6)}, "",
                  [](const auto& v) {
                    return apply_endo(v[0], v[1], v[2] * v[3]) ==
                           apply_endo(v[0], v[1], v[2]) * apply_endo(v[0], v[1], v[3]);
                  });
  }
  for (int64_t k = -8; k <= 8; ++k) {
    for (int64_t l = -8; l <= 8; ++l) {
      s.check(word_Bkl(k, l) == w_conj(V(k) * U(l), word_B()),
              [&] { return "word_Bkl(" + std::to_string(k) + "," + std::to_string(l) + ")"; });
    }
  }
  // All reduced words of length <= 3.
  std::vector<FreeWord> small{FreeWord{}};
  for (size_t from = 0, len = 0; len < 3; ++len) {
    const size_t to = small.size();
    for (size_t i = from; i < to; ++i) {
      for (const auto& g : {U(1), U(-1), V(1), V(-1)}) {
        const FreeWord w = small[i] * g;
        if (w.length() == static_cast<int64_t>(len + 1)) small.push_back(w);
      }
    }
    from = to;
  }
  for (const auto& a : small) {
    for (const auto& b : small) {
      const FreeWord ab = a * b;
      for (const auto& c : small) {
        s.check(ab * c == a * (b * c), [&] {
          return "associativity: " + format_word(a) + " | " + format_word(b) + " | " + format_word(c);
        });
      }
    }
  }
  return s.take();
}

// ---------------------------------------------------------------------------
// pi1k

HomNormalForm random_nf(Rng& r, int64_t bound) {
  HomNormalForm nf;
  nf.type = static_cast<HomType>(r.range(1, 4));
  nf.s1 = r.range(-bound, bound);
  nf.s2 = r.range(-bound, bound);
  if (nf.type == HomType::T4) {
    nf.r1 = r.range(0, bound);
    nf.r2 = nf.r1 == 0 ? r.range(0, bound) : r.range(-bound, bound);
  } else {
    nf.i = r.range(0, 1);
  }
  return nf;
}

SuiteReport suite_pi1k(const SelftestConfig& cfg, Rng r) {
  Suite s("pi1k");
  const int64_t b = cfg.pi1k_bound;
  for (int64_t c = 0; c < cfg.cases; ++c) {
    const Pi1K x = random_pi1k(r, b), y = random_pi1k(r, b), z = random_pi1k(r, b);
    auto desc = [&] { return str(x) + " " + str(y) + " " + str(z); };
    s.check(k_mul(k_mul(x, y), z) == k_mul(x, k_mul(y, z)), [&] { return "associativity: " + desc(); });
    s.check(k_mul(x, k_inv(x)) == Pi1K{} && k_mul(k_inv(x), x) == Pi1K{}, [&] { return "inverse: " + desc(); });
    const int64_t t = r.range(-6, 6);
    Pi1K rep{};
    for (int64_t i = 0; i < (t < 0 ? -t : t); ++i) rep = k_mul(rep, t < 0 ? k_inv(x) : x);
    s.check(k_pow(x, t) == rep, [&] { return "k_pow: " + str(x) + "^" + std::to_string(t); });
    s.check(h_iso(k_mul(x, y)) == k_mul(h_iso(x), h_iso(y)), [&] { return "h_iso homomorphism: " + desc(); });
    s.check(h_iso_inv(h_iso(x)) == x && h_iso(h_iso_inv(x)) == x, [&] { return "h_iso inverse: " + desc(); });

    const HomNormalForm nf = random_nf(r, b);
    const Pi1K conj = random_pi1k(r, b);
    const HomPair target = nf.pair();
    const HomPair h(k_conj(conj, target.f10()), k_conj(conj, target.f01()));
    const Normalized n = normalize_hom(h);
    s.check(n.nf == nf, [&] { return "normal form not recovered: " + str(nf) + " conj " + str(conj); });
    s.check(k_conj(n.conjugator, h.f10()) == n.nf.pair().f10() &&
                k_conj(n.conjugator, h.f01()) == n.nf.pair().f01(),
            [&] { return "conjugator does not conjugate: " + str(nf) + " conj " + str(conj); });
    const Normalized again = normalize_hom(target);
    s.check(again.nf == nf && again.conjugator == Pi1K{}, [&] { return "not idempotent: " + str(nf); });
  }
  return s.take();
}

// ---------------------------------------------------------------------------
// p2

using ThetaFn = FreeWord (*)(int64_t, int64_t, const FreeWord&);

FreeWord theta_real(int64_t m, int64_t n, const FreeWord& w) { return theta(m, n, w); }

// Loses delta(n) in the conjugating power of the image of u.
FreeWord theta_mutant(int64_t m, int64_t n, const FreeWord& w) {
  const FreeWord& b = word_B();
  return apply_endo(w_pow(b, m) * U(eps(n)) * w_pow(b, -m),
                    w_pow(b, m) * V() * U(-2 * m) * w_pow(b, delta(n) - m), w);
}

SuiteReport suite_p2(const SelftestConfig& cfg, Rng r, ThetaFn T) {
  Suite s("p2");
  const int64_t b = cfg.p2_bound;
  for (int64_t c = 0; c < cfg.cases; ++c) {
    const Pi1K q1 = random_pi1k(r, b), q2 = random_pi1k(r, b);
    const Pi1K q12 = k_mul(q1, q2);
    s.check_words("theta action law", {random_word(r, 6, 2)}, " q1=" + str(q1) + " q2=" + str(q2),
                  [&](const auto& v) { return T(q1.m, q1.n, T(q2.m, q2.n, v[0])) == T(q12.m, q12.n, v[0]); });
    s.check_words("theta parity", {random_word(r, 6, 2)}, " q=" + str(q1), [&](const auto& v) {
      return T(q1.m, q1.n, v[0]) == T(q1.m, q1.n + 2, v[0]);
    });
    s.check(T(q1.m, q1.n, word_B()) == w_pow(word_B(), eps(q1.n)),
            [&] { return "theta(q)(B) != B^eps(n): q=" + str(q1); });

    const P2Elem x = random_p2(r, 4, b), y = random_p2(r, 4, b), z = random_p2(r, 4, b);
    auto desc = [&] { return str(x) + " " + str(y) + " " + str(z); };
    s.check((x * y) * z == x * (y * z), [&] { return "associativity: " + desc(); });
    s.check(x * p2_inv(x) == P2Elem{} && p2_inv(x) * x == P2Elem{}, [&] { return "inverse: " + desc(); });
    s.check(l_sigma(x * y) == l_sigma(x) * l_sigma(y), [&] { return "l_sigma homomorphism: " + desc(); });
    s.check(l_sigma(l_sigma(x)) == sigma_sq() * x * p2_inv(sigma_sq()),
            [&] { return "l_sigma^2 != conjugation by sigma^2: " + desc(); });
    s.check_words("rho cocycle", {random_word(r, 5, 2), random_word(r, 5, 2)}, "", [](const auto& v) {
      return rho(v[0] * v[1]) == rho(v[0]) * theta(g_word(v[0]), rho(v[1]));
    });
  }
  return s.take();
}

// ---------------------------------------------------------------------------
// kerg

SuiteReport suite_kerg(const SelftestConfig& cfg, Rng r) {
  Suite s("kerg");
  const int64_t b = cfg.kerg_bound;
  for (int64_t c = 0; c < cfg.cases; ++c) {
    const BBasisWord bw = random_bbasis(r, b, 12);
    const FreeWord w = from_b_basis(bw);
    const std::string d = format_bbasis(bw);
    s.check(to_b_basis(w) == bw, [&] { return "to_b_basis(from_b_basis(x)) != x: " + d; });
    s.check(from_gammas(rs_rewrite(w)) == w, [&] { return "Gamma reconstruction: " + d; });

    const BBasisWord small = random_bbasis(r, 3, 4);
    const FreeWord sw = from_b_basis(small);
    const AbKerG ab = abelianize(small);
    const Pi1K q = random_pi1k(r, 3);
    const std::string sd = format_bbasis(small);
    s.check(abelianize(to_b_basis(theta(q, sw))) == theta_ab(q.m, q.n, ab),
            [&] { return "theta_ab: q=" + str(q) + " x=" + sd; });
    s.check(abelianize(to_b_basis(rho(sw))) == rho_ab(ab), [&] { return "rho_ab: x=" + sd; });
    s.check(abelianize(to_b_basis(c_pq(q.m, q.n, sw))) == c_ab(q.m, q.n, ab),
            [&] { return "c_ab: (p,q)=" + str(q) + " x=" + sd; });
  }
  for (int64_t k = -b; k <= b; ++k) {
    for (int64_t l = -b; l <= b; ++l) {
      auto at = [&] { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; };
      s.check(from_gammas(b_to_gamma(k, l)) == word_Bkl(k, l), [&] { return "b_to_gamma" + at(); });
      if (l != 0) {
        s.check(from_b_basis(gamma_to_b({k, l, 1})) == gamma_word(k, l), [&] { return "gamma_to_b" + at(); });
      }
    }
  }
  for (int64_t k = -6; k <= 6; ++k) {
    const std::string ks = std::to_string(k);
    for (int64_t rr = 0; rr <= 1; ++rr) {
      s.check(to_b_basis(special_T(k, rr)) == closed_T_word(k, rr), [&] { return "closed T word k=" + ks; });
    }
    s.check(to_b_basis(special_I(k)) == closed_I_word(k), [&] { return "closed I word k=" + ks; });
    for (int64_t l = -6; l <= 6; ++l) {
      const std::string kl = ks + " l=" + std::to_string(l);
      if (k >= -4 && k <= 4 && l >= -4 && l <= 4) {
        s.check(to_b_basis(special_J(k, l)) == closed_J_word(k, l), [&] { return "closed J word k=" + kl; });
      }
      s.check(abelianize(to_b_basis(special_O(k, l))) == closed_O_ab(k, l), [&] { return "closed O k=" + kl; });
      s.check(abelianize(to_b_basis(special_J(k, l))) == closed_J_ab(k, l), [&] { return "closed J k=" + kl; });
      if (l == 0 || l == 1) {
        s.check(abelianize(to_b_basis(special_T(k, l))) == closed_T_ab(k, l), [&] { return "closed T r=" + kl; });
      }
    }
    s.check(abelianize(to_b_basis(special_I(k))) == closed_I_ab(k), [&] { return "closed I k=" + ks; });
  }
  auto conj_ok = [](const ConjData& cd, const FreeWord& image) {
    return in_kerg(cd.conj) && image == w_conj(cd.conj, w_pow(word_Bkl(cd.k, cd.l), cd.sign));
  };
  for (int64_t k = -3; k <= 3; ++k) {
    for (int64_t l = -3; l <= 3; ++l) {
      const FreeWord bkl = word_Bkl(k, l);
      const std::string at = " k=" + std::to_string(k) + " l=" + std::to_string(l);
      s.check(conj_ok(conj_data_rho(k, l), rho(bkl)), [&] { return "rho conjugator" + at; });
      for (int64_t m = -3; m <= 3; ++m) {
        for (int64_t n = -3; n <= 3; ++n) {
          const std::string mn = at + " m=" + std::to_string(m) + " n=" + std::to_string(n);
          s.check(conj_ok(conj_data_theta(m, n, k, l), theta(m, n, bkl)), [&] { return "theta conjugator" + mn; });
          s.check(conj_ok(conj_data_c(m, n, k, l), c_pq(m, n, bkl)), [&] { return "c conjugator" + mn; });
        }
      }
    }
  }
  return s.take();
}

// ---------------------------------------------------------------------------
// buc

SuiteReport suite_buc(const SelftestConfig& cfg, Rng r) {
  Suite s("buc");
  const int64_t R = cfg.buc_bound;

  for (int64_t n1 = -3; n1 <= 4; ++n1) {
    for (int64_t r2 = -R; r2 <= R; ++r2) {
      if (r2 == 0) continue;
      const std::string nr = " n1=" + std::to_string(n1) + " r2=" + std::to_string(r2);
      const int64_t d = delta(n1);
      s.check(xi(n1, r2, closed_J_ab(n1 - 1, -2 * r2)) == delta(n1 + 1), [&] { return "xi(J)" + nr; });
      s.check(xi(n1, r2, closed_O_ab(n1 - 1, 2 * d * r2)) == (n1 == 1 ? 0 : d), [&] { return "xi(O)" + nr; });
      s.check(xi(n1, r2, closed_T_ab(2 * d * r2, d)) == (n1 == 1 ? 1 : 0), [&] { return "xi(T)" + nr; });
      for (int64_t k = -R; k <= R; ++k) {
        for (int64_t l = -R; l <= R; ++l) {
          const AbKerG bkl = basis(k, l);
          const std::string at = nr + " k=" + std::to_string(k) + " l=" + std::to_string(l);
          s.check(xi(n1, r2, mu_ab(n1, r2, bkl)) == 0, [&] { return "xi o mu != 0:" + at; });
          for (int64_t r1 = 0; r1 <= R; ++r1) {
            if (r1 != 0 && val2(r1) <= val2(r2)) continue;
            for (int64_t m1 = -3; m1 <= 3; ++m1) {
              s.check(xi(n1, r2, nu_ab(m1, n1, r1, r2, bkl)) == 0, [&] {
                return "xi o nu != 0:" + at + " r1=" + std::to_string(r1) + " m1=" + std::to_string(m1);
              });
            }
          }
        }
      }
    }
  }

  for (int64_t rr = -16; rr <= 16; ++rr) {
    if (rr == 0) continue;
    const int64_t mod = int64_t{1} << (val2(rr) + 1);
    const int64_t width = 2 * (rr < 0 ? -rr : rr);
    for (int64_t off = -32; off < 32; ++off) {
      int64_t count = 0;
      for (int64_t t = off; t < off + width; ++t) count += (t % mod == 0);
      s.check(count == odd_part(rr), [&] {
        return "window count r=" + std::to_string(rr) + " offset=" + std::to_string(off);
      });
    }
  }

  auto check_witness = [&](const HomNormalForm& nf) {
    const WitnessPair wp = generate_witness(nf);
    s.check(wp.status == WitnessStatus::Generated && verify_witness(nf.pair(), wp.a, wp.b).all(),
            [&] { return "witness: " + str(nf); });
  };
  for (int64_t t = 1; t <= 3; ++t) {
    for (int64_t s1 = 0; s1 <= 3; ++s1) {
      for (int64_t s2 = 0; s2 <= 3; ++s2) {
        HomNormalForm nf{static_cast<HomType>(t), 0, s1, s2, 0, 0};
        if (classify(nf).has_bu) {
          for (int64_t m1 = -4; m1 <= 4; ++m1) {
            for (int64_t n1 = -4; n1 <= 4; ++n1) {
              const int64_t sb = delta(s1);
              s.check(obstruction_check_type2(sb, m1, n1), [&] {
                return "type2 obstruction s=" + std::to_string(sb) + " m1=" + std::to_string(m1) +
                       " n1=" + std::to_string(n1);
              });
            }
          }
        } else {
          check_witness(nf);
        }
      }
    }
  }
  for (int64_t r1 = 0; r1 <= R; ++r1) {
    for (int64_t r2 = -R; r2 <= R; ++r2) {
      if (r1 == 0 && r2 < 0) continue;
      for (int64_t s1 = 0; s1 <= 3; ++s1) {
        for (int64_t s2 = 0; s2 <= 3; ++s2) {
          const HomNormalForm nf{HomType::T4, 0, s1, s2, r1, r2};
          if (!classify(nf).has_bu) {
            check_witness(nf);
            continue;
          }
          if (s2 != 0) continue;  // the obstruction does not see s2
          for (int64_t m1 = -3; m1 <= 3; ++m1) {
            for (int64_t n1 = -3; n1 <= 4; ++n1) {
              s.check(obstruction_check_type4(r1, r2, m1, n1), [&] {
                return "type4 obstruction " + str(nf) + " m1=" + std::to_string(m1) + " n1=" + std::to_string(n1);
              });
            }
          }
        }
      }
    }
  }

  for (int64_t c = 0; c < cfg.cases; ++c) {
    // Witnesses carried to a conjugate of the normal form.
    HomNormalForm nf = random_nf(r, 4);
    nf.i = 0;
    if (!classify(nf).has_bu) {
      const Pi1K x = random_pi1k(r, 3);
      const HomPair h(k_conj(x, nf.pair().f10()), k_conj(x, nf.pair().f01()));
      const Normalized n = normalize_hom(h);
      const WitnessPair wp = transport_witness(generate_witness(n.nf), k_inv(n.conjugator));
      s.check(wp.status == WitnessStatus::Generated && verify_witness(h, wp.a, wp.b).all(),
              [&] { return "transported witness: " + str(nf) + " x=" + str(x); });
    }

    const int64_t a1 = r.range(-3, 3), a2 = r.range(-3, 3), b1 = r.range(-3, 3);
    const FreeWord x = from_b_basis(random_bbasis(r, 2, 3));
    const FreeWord y = from_b_basis(random_bbasis(r, 2, 3));
    const Pi1K q1 = random_pi1k(r, 3), q2 = random_pi1k(r, 3);
    const P2Elem a{U(a1) * V(a2) * x, q1};
    const P2Elem bb{U(b1) * y, q2};
    auto desc = [&] { return " a=" + str(a) + " b=" + str(bb); };
    s.check((bb * a).w == closed_pF_ba(a1, a2, x, b1, y, q2.m, q2.n), [&] { return "p_F(ba)" + desc(); });
    s.check((a * l_sigma(bb)).w == closed_pF_a_lsigma_b(a1, a2, x, q1.m, q1.n, b1, y, q2.n),
            [&] { return "p_F(a l_sigma(b))" + desc(); });
  }
  return s.take();
}

void require_positive(int64_t v, const char* what) {
  if (v < 1) throw Error(ErrorKind::PreconditionFail, std::string(what) + " must be >= 1");
}

}  // namespace

bool SelftestReport::ok() const {
  for (const auto& s : suites) {
    if (s.failures != 0) return false;
  }
  return true;
}

std::string SelftestReport::format() const {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "%-8s %10s %10s  %s\n", "suite", "checks", "failures", "result");
  out += line;
  for (const auto& s : suites) {
    std::snprintf(line, sizeof line, "%-8s %10lld %10lld  %s\n", s.name.c_str(),
                  static_cast<long long>(s.checks), static_cast<long long>(s.failures),
                  s.failures == 0 ? "PASS" : "FAIL");
    out += line;
  }
  for (const auto& s : suites) {
    if (s.failures != 0) out += "counterexample [" + s.name + "] " + s.counterexample + "\n";
  }
  return out;
}

SelftestReport run_selftest(const SelftestConfig& cfg) {
  require_positive(cfg.cases, "cases");
  require_positive(cfg.word_len, "word_len");
  require_positive(cfg.pi1k_bound, "pi1k_bound");
  require_positive(cfg.p2_bound, "p2_bound");
  require_positive(cfg.kerg_bound, "kerg_bound");
  require_positive(cfg.buc_bound, "buc_bound");

  // One independent stream per suite, so scheduling cannot change any draw.
  auto rng = [&](uint64_t i) { return Rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (i + 1))); };
  const ThetaFn T = cfg.mutant ? theta_mutant : theta_real;
  std::vector<std::future<SuiteReport>> jobs;
  jobs.push_back(std::async(std::launch::async, suite_word, cfg, rng(0)));
  jobs.push_back(std::async(std::launch::async, suite_pi1k, cfg, rng(1)));
  jobs.push_back(std::async(std::launch::async, suite_p2, cfg, rng(2), T));
  jobs.push_back(std::async(std::launch::async, suite_kerg, cfg, rng(3)));
  jobs.push_back(std::async(std::launch::async, suite_buc, cfg, rng(4)));

  SelftestReport rep;
  for (auto& j : jobs) rep.suites.push_back(j.get());
  return rep;
}

}  // namespace kbu
