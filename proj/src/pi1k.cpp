#include "pi1k.hpp"

#include <string>

namespace kbu {

Pi1K k_mul(const Pi1K& a, const Pi1K& b) {
  return {checked::add(a.m, checked::mul(eps(a.n), b.m)), checked::add(a.n, b.n)};
}

Pi1K k_inv(const Pi1K& a) {
  return {checked::neg(checked::mul(eps(a.n), a.m)), checked::neg(a.n)};
}

Pi1K k_pow(const Pi1K& a, int64_t t) {
  Pi1K base = t < 0 ? k_inv(a) : a;
  uint64_t e = t < 0 ? uint64_t(0) - uint64_t(t) : uint64_t(t);
  Pi1K acc{};
  while (e) {
    if (e & 1) acc = k_mul(acc, base);
    e >>= 1;
    if (e) base = k_mul(base, base);
  }
  return acc;
}

Pi1K k_conj(const Pi1K& c, const Pi1K& a) { return k_mul(k_mul(c, a), k_inv(c)); }

bool commutes(const Pi1K& a, const Pi1K& b) { return k_mul(a, b) == k_mul(b, a); }

Pi1K g_word(const FreeWord& w) {
  Pi1K acc{};
  for (const auto& s : w.syllables())
    acc = k_mul(acc, s.gen == Gen::U ? Pi1K{s.exp, 0} : Pi1K{0, s.exp});
  return acc;
}

Pi1K h_iso(const Pi1K& a) { return {checked::add(a.m, delta(a.n)), a.n}; }
Pi1K h_iso_inv(const Pi1K& a) { return {checked::sub(a.m, delta(a.n)), a.n}; }

HomPair::HomPair(Pi1K f10, Pi1K f01) : f10_(f10), f01_(f01) {
  if (!commutes(f10, f01)) {
    throw Error(ErrorKind::NonCommuting,
                "images (" + std::to_string(f10.m) + "," + std::to_string(f10.n) + ") and (" +
                    std::to_string(f01.m) + "," + std::to_string(f01.n) +
                    ") do not commute; not a homomorphism from Z^2");
  }
}

HomPair HomNormalForm::pair() const {
  const int64_t odd1 = checked::add(checked::mul(2, s1), 1);
  const int64_t odd2 = checked::add(checked::mul(2, s2), 1);
  switch (type) {
    case HomType::T1: return {{i, odd1}, {0, checked::mul(2, s2)}};
    case HomType::T2: return {{i, odd1}, {i, odd2}};
    case HomType::T3: return {{0, checked::mul(2, s1)}, {i, odd2}};
    case HomType::T4: break;
  }
  return {{r1, checked::mul(2, s1)}, {r2, checked::mul(2, s2)}};
}

namespace {

// Conjugation by (p,0) sends (m, odd) to (m + 2p, odd); pick p so the result
// lands in {0,1}.
int64_t shift_to_bit(int64_t m) { return checked::sub(delta(m), m) / 2; }

}  // namespace

Normalized normalize_hom(const HomPair& h) {
  const Pi1K a = h.f10();
  const Pi1K b = h.f01();
  const bool odd_a = delta(a.n) != 0;
  const bool odd_b = delta(b.n) != 0;

  Normalized out;
  HomNormalForm& nf = out.nf;
  if (odd_a || odd_b) {
    // Commutation forces the first coordinate of an even-n image to vanish
    // (T1, T3) or both first coordinates to agree (T2).
    const Pi1K& odd = odd_a ? a : b;
    out.conjugator = {shift_to_bit(odd.m), 0};
    nf.i = delta(odd.m);
    if (odd_a && odd_b) {
      nf.type = HomType::T2;
      nf.s1 = (a.n - 1) / 2;
      nf.s2 = (b.n - 1) / 2;
    } else if (odd_a) {
      nf.type = HomType::T1;
      nf.s1 = (a.n - 1) / 2;
      nf.s2 = b.n / 2;
    } else {
      nf.type = HomType::T3;
      nf.s1 = a.n / 2;
      nf.s2 = (b.n - 1) / 2;
    }
  } else {
    nf.type = HomType::T4;
    nf.s1 = a.n / 2;
    nf.s2 = b.n / 2;
    // Conjugation by (0,1) negates both first coordinates.
    const bool flip = a.m < 0 || (a.m == 0 && b.m < 0);
    out.conjugator = {0, flip ? 1 : 0};
    nf.r1 = flip ? checked::neg(a.m) : a.m;
    nf.r2 = flip ? checked::neg(b.m) : b.m;
  }
  return out;
}

}  // namespace kbu
