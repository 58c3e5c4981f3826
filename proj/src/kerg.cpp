#include "kerg.hpp"

#include <string>

namespace kbu {

using checked::add;
using checked::mul;
using checked::neg;
using checked::sub;

FreeWord gamma_word(int64_t k, int64_t l) {
  return FreeWord::from_syllables({{Gen::V, k},
                                   {Gen::U, l},
                                   {Gen::V, 1},
                                   {Gen::U, l},
                                   {Gen::V, neg(add(k, 1))}});
}

// ---------------------------------------------------------------------------
// BBasisWord

void BBasisWord::append(int64_t k, int64_t l, int64_t exp) {
  if (exp == 0) return;
  if (!f_.empty() && f_.back().k == k && f_.back().l == l) {
    f_.back().exp = add(f_.back().exp, exp);
    if (f_.back().exp == 0) f_.pop_back();
    return;
  }
  f_.push_back({k, l, exp});
}

BBasisWord BBasisWord::from_factors(const std::vector<BFactor>& stream) {
  BBasisWord w;
  for (const auto& f : stream) w.append(f.k, f.l, f.exp);
  return w;
}

BBasisWord BBasisWord::inverse() const {
  BBasisWord w;
  for (auto it = f_.rbegin(); it != f_.rend(); ++it) w.append(it->k, it->l, neg(it->exp));
  return w;
}

BBasisWord operator*(const BBasisWord& a, const BBasisWord& b) {
  BBasisWord r = a;
  for (const auto& f : b.f_) r.append(f.k, f.l, f.exp);
  return r;
}

// ---------------------------------------------------------------------------
// AbKerG

AbKerG::AbKerG(std::initializer_list<std::pair<const Key, int64_t>> init) {
  for (const auto& [key, c] : init) add(key.first, key.second, c);
}

void AbKerG::add(int64_t k, int64_t l, int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace({k, l}, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) c_.erase(it);
}

int64_t AbKerG::coeff(int64_t k, int64_t l) const {
  auto it = c_.find({k, l});
  return it == c_.end() ? 0 : it->second;
}

AbKerG& AbKerG::operator+=(const AbKerG& o) {
  for (const auto& [key, c] : o.c_) add(key.first, key.second, c);
  return *this;
}

AbKerG& AbKerG::operator-=(const AbKerG& o) {
  for (const auto& [key, c] : o.c_) add(key.first, key.second, neg(c));
  return *this;
}

AbKerG AbKerG::scaled(int64_t s) const {
  AbKerG out;
  for (const auto& [key, c] : c_) out.add(key.first, key.second, mul(c, s));
  return out;
}

AbKerG basis(int64_t k, int64_t l, int64_t c) {
  AbKerG x;
  x.add(k, l, c);
  return x;
}

// ---------------------------------------------------------------------------
// Rewriting

bool in_kerg(const FreeWord& w) { return g_word(w) == Pi1K{0, 0}; }

namespace {

void require_kernel(const FreeWord& w) {
  const Pi1K g = g_word(w);
  if (g != Pi1K{0, 0}) {
    throw Error(ErrorKind::NotInKernel, "word is not in ker g: g=(" + std::to_string(g.m) +
                                            "," + std::to_string(g.n) + ")");
  }
}

}  // namespace

std::vector<GammaGen> rs_rewrite(const FreeWord& w) {
  require_kernel(w);
  // Coset state (k,l) stands for the representative v^k u^l.
  int64_t k = 0, l = 0;
  std::vector<GammaGen> out;
  for (const auto& s : w.syllables()) {
    if (s.gen == Gen::U) {
      l = add(l, s.exp);
      continue;
    }
    const bool forward = s.exp > 0;
    for (int64_t t = 0, n = forward ? s.exp : neg(s.exp); t < n; ++t) {
      if (forward) {
        if (l != 0) out.push_back({k, l, 1});
        k = add(k, 1);
      } else {
        if (l != 0) out.push_back({sub(k, 1), neg(l), -1});
        k = sub(k, 1);
      }
      l = neg(l);
    }
  }
  return out;
}

FreeWord from_gammas(const std::vector<GammaGen>& gs) {
  std::vector<Syllable> stream;
  for (const auto& g : gs) {
    const FreeWord piece = g.exp > 0 ? gamma_word(g.k, g.l) : w_inv(gamma_word(g.k, g.l));
    stream.insert(stream.end(), piece.syllables().begin(), piece.syllables().end());
  }
  return FreeWord::from_syllables(stream);
}

BBasisWord gamma_to_b(const GammaGen& g) {
  if (g.l == 0) throw Error(ErrorKind::PreconditionFail, "Gamma_{k,0} is not a generator");
  BBasisWord w;
  if (g.l > 0) {
    for (int64_t i = 1; i <= g.l; ++i) w.append(g.k, g.l - i, 1);
  } else {
    for (int64_t i = 1; i <= -g.l; ++i) w.append(g.k, g.l - 1 + i, -1);
  }
  return g.exp > 0 ? w : w.inverse();
}

std::vector<GammaGen> b_to_gamma(int64_t k, int64_t l) {
  std::vector<GammaGen> out;
  const int64_t next = add(l, 1);
  if (next != 0) out.push_back({k, next, 1});
  if (l != 0) out.push_back({k, l, -1});
  return out;
}

BBasisWord to_b_basis(const FreeWord& w) {
  BBasisWord out;
  for (const auto& g : rs_rewrite(w)) out = out * gamma_to_b(g);
  return out;
}

FreeWord from_b_basis(const BBasisWord& bw) {
  std::vector<Syllable> stream;
  for (const auto& f : bw.factors()) {
    const FreeWord piece = w_pow(word_Bkl(f.k, f.l), f.exp);
    stream.insert(stream.end(), piece.syllables().begin(), piece.syllables().end());
  }
  return FreeWord::from_syllables(stream);
}

AbKerG abelianize(const BBasisWord& bw) {
  AbKerG x;
  for (const auto& f : bw.factors()) x.add(f.k, f.l, f.exp);
  return x;
}

// ---------------------------------------------------------------------------
// Induced maps on the abelianisation

AbKerG theta_ab(int64_t m, int64_t n, const AbKerG& x) {
  return x.map_linear([&](int64_t k, int64_t l) {
    return basis(k, sub(mul(eps(n), l), mul(2 * delta(k), m)), eps(n));
  });
}

AbKerG rho_ab(const AbKerG& x) {
  return x.map_linear([](int64_t k, int64_t l) {
    return basis(neg(k), mul(eps(add(k, 1)), l), eps(k));
  });
}

AbKerG c_ab(int64_t p, int64_t q, const AbKerG& x) {
  return x.map_linear([&](int64_t k, int64_t l) {
    return basis(add(k, p), add(l, mul(eps(k), q)));
  });
}

FreeWord c_pq(int64_t p, int64_t q, const FreeWord& x) {
  require_kernel(x);
  return V(p) * U(q) * x * U(neg(q)) * V(neg(p));
}

// ---------------------------------------------------------------------------
// Special words

namespace {

void require_bit(int64_t r) {
  if (r != 0 && r != 1) throw Error(ErrorKind::PreconditionFail, "r must be 0 or 1");
}

}  // namespace

FreeWord special_T(int64_t k, int64_t r) {
  require_bit(r);
  const int64_t e = eps(r);
  return U(k) * w_pow(w_pow(word_B(), e) * U(-e), mul(k, e));
}

FreeWord special_I(int64_t k) { return V(k) * w_pow(V() * word_B(), neg(k)); }

FreeWord special_O(int64_t k, int64_t l) { return w_commutator(V(mul(2, k)), U(l)); }

FreeWord special_J(int64_t k, int64_t l) {
  return V(mul(2, k)) * w_pow(V() * U(l), mul(-2, k));
}

BBasisWord closed_T_word(int64_t k, int64_t r) {
  require_bit(r);
  BBasisWord w;
  const int64_t sk = sgn(k);
  for (int64_t i = 1; i <= sk * k; ++i) w.append(0, k - sk * i - r + (sk + 1) / 2, sk);
  return w;
}

BBasisWord closed_I_word(int64_t k) {
  BBasisWord w;
  const int64_t sk = sgn(k);
  for (int64_t i = 1; i <= sk * k; ++i) w.append(i + k * (1 - sk) / 2, 0, 1);
  return sk > 0 ? w.inverse() : w;
}

BBasisWord closed_J_word(int64_t k, int64_t l) {
  BBasisWord w;
  if (k == 0 || l == 0) return w;
  const int64_t kk = k > 0 ? k : neg(k);
  const int64_t ll = l > 0 ? l : neg(l);
  const int64_t e = sgn(l);
  const int64_t omega = e > 0 ? 1 : 0;
  for (int64_t i = 1; i <= kk; ++i) {
    const int64_t first = k > 0 ? 2 * kk - 2 * i + 1 : -2 * i + 1;
    for (int64_t j = 1; j <= ll; ++j) w.append(first, e * j - omega, -e);
  }
  return k > 0 ? w : w.inverse();
}

AbKerG closed_T_ab(int64_t k, int64_t r) {
  require_bit(r);
  AbKerG x;
  const int64_t sk = sgn(k);
  for (int64_t i = 1; i <= sk * k; ++i) x.add(0, sk * (i + (sk * (1 - 2 * r) - 1) / 2), sk);
  return x;
}

AbKerG closed_I_ab(int64_t k) {
  AbKerG x;
  const int64_t sk = sgn(k);
  for (int64_t i = 1; i <= sk * k; ++i) x.add(sk * i + (1 - sk) / 2, 0, -sk);
  return x;
}

AbKerG closed_J_ab(int64_t k, int64_t l) {
  AbKerG x;
  const int64_t sk = sgn(k), sl = sgn(l);
  for (int64_t i = 1; i <= sk * k; ++i)
    for (int64_t j = 1; j <= sl * l; ++j) x.add(sk * (2 * i - 1), sl * (j - (1 + sl) / 2), -sk * sl);
  return x;
}

AbKerG closed_O_ab(int64_t k, int64_t l) {
  AbKerG x;
  const int64_t sk = sgn(k), sl = sgn(l);
  for (int64_t i = 1; i <= sk * k; ++i) {
    for (int64_t j = 1; j <= sl * l; ++j) {
      x.add(sk * (2 * i - 1), -sl * j + (sl - 1) / 2, sk * sl);
      x.add(sk * (2 * i - 1) - 1, sl * j - (1 + sl) / 2, -sk * sl);
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Conjugator data

ConjData conj_data_theta(int64_t m, int64_t n, int64_t k, int64_t l) {
  const int64_t twodm = mul(2 * delta(k), m);
  FreeWord gamma = theta(m, n, V(k) * U(l)) * U(add(mul(eps(add(n, 1)), l), twodm)) * V(neg(k));
  return {std::move(gamma), k, sub(mul(eps(n), l), twodm), static_cast<int>(eps(n))};
}

ConjData conj_data_rho(int64_t k, int64_t l) {
  FreeWord lambda = rho(V(k) * U(l)) * U(mul(eps(k), l)) * V(k);
  return {std::move(lambda), neg(k), mul(eps(add(k, 1)), l), static_cast<int>(eps(k))};
}

ConjData conj_data_c(int64_t p, int64_t q, int64_t k, int64_t l) {
  FreeWord eta = V(p) * U(q) * V(k) * U(mul(eps(add(k, 1)), q)) * V(neg(add(k, p)));
  return {std::move(eta), add(k, p), add(l, mul(eps(k), q)), 1};
}

}  // namespace kbu
