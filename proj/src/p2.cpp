#include "p2.hpp"

namespace kbu {

FreeWord theta(int64_t m, int64_t n, const FreeWord& w) {
  if (m == 0 && delta(n) == 0) return w;
  const int64_t d = delta(n);
  const FreeWord& b = word_B();
  const int64_t shift = checked::sub(m, d);
  const FreeWord img_u = w_pow(b, shift) * U(eps(n)) * w_pow(b, checked::neg(shift));
  const FreeWord img_v =
      w_pow(b, m) * V() * U(checked::mul(-2, m)) * w_pow(b, checked::neg(shift));
  return apply_endo(img_u, img_v, w);
}

P2Elem p2_identity() { return {}; }

P2Elem p2_mul(const P2Elem& a, const P2Elem& b) {
  return {a.w * theta(a.q, b.w), k_mul(a.q, b.q)};
}

P2Elem p2_inv(const P2Elem& a) {
  const Pi1K qi = k_inv(a.q);
  return {theta(qi, w_inv(a.w)), qi};
}

P2Elem p2_pow(const P2Elem& a, int64_t t) {
  P2Elem base = t < 0 ? p2_inv(a) : a;
  uint64_t e = t < 0 ? uint64_t(0) - uint64_t(t) : uint64_t(t);
  P2Elem acc{};
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

P2Elem sigma_sq() { return {word_B(), {0, 0}}; }

namespace {

// l_sigma on the generators of iota(F(u,v)):
//   l_sigma(u;0,0) = (B u^-1 B^-1; 1,0),  l_sigma(v;0,0) = (v^-1 B; 0,1).
const P2Elem& lsigma_u() {
  static const P2Elem e{word_B() * U(-1) * w_inv(word_B()), {1, 0}};
  return e;
}
const P2Elem& lsigma_v() {
  static const P2Elem e{V(-1) * word_B(), {0, 1}};
  return e;
}

P2Elem lsigma_iota(const FreeWord& w) {
  P2Elem acc{};
  for (const auto& s : w.syllables())
    acc = acc * p2_pow(s.gen == Gen::U ? lsigma_u() : lsigma_v(), s.exp);
  return acc;
}

}  // namespace

FreeWord rho(const FreeWord& w) { return lsigma_iota(w).w; }

P2Elem l_sigma(const P2Elem& a) {
  // (w;m,n) = (w;0,0)(1;m,0)(1;0,n), with l_sigma(1;m,0) = (1;m,0) and
  // l_sigma(1;0,n) = (B^delta(n); 0,n).
  return lsigma_iota(a.w) * P2Elem{{}, {a.q.m, 0}} *
         P2Elem{w_pow(word_B(), delta(a.q.n)), {0, a.q.n}};
}

SplitNormal split_normal(const FreeWord& w) {
  const Pi1K g = g_word(w);
  return {g.m, g.n, V(checked::neg(g.n)) * U(checked::neg(g.m)) * w};
}

}  // namespace kbu
