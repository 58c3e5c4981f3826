#include "buc.hpp"

#include <string>

namespace kbu {

using checked::add;
using checked::mul;
using checked::neg;
using checked::sub;

int64_t val2(int64_t t) {
  if (t == 0) throw Error(ErrorKind::ZeroInput, "2-adic valuation of 0");
  return __builtin_ctzll(static_cast<unsigned long long>(t));
}

int64_t odd_part(int64_t r) {
  if (r == 0) throw Error(ErrorKind::ZeroInput, "odd part of 0");
  const unsigned long long a =
      r < 0 ? 0ULL - static_cast<unsigned long long>(r) : static_cast<unsigned long long>(r);
  return static_cast<int64_t>(a >> val2(r));
}

std::string_view reason_name(BUReason r) {
  switch (r) {
    case BUReason::Type3: return "Type3";
    case BUReason::Type4OddValuation: return "Type4OddValuation";
    case BUReason::NotBUType1: return "NotBU-Type1";
    case BUReason::NotBUType2: return "NotBU-Type2";
    case BUReason::NotBUType4EvenS1: return "NotBU-Type4-EvenS1";
    case BUReason::NotBUType4ValuationFail: return "NotBU-Type4-ValuationFail";
    case BUReason::NotBUType4ZeroR2: return "NotBU-Type4-ZeroR2";
  }
  return "?";
}

std::string_view status_name(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Generated: return "Generated";
    case WitnessStatus::UnsupportedI1: return "UnsupportedI1";
    case WitnessStatus::NotApplicableBU: return "NotApplicableBU";
  }
  return "?";
}

BUVerdict classify(const HomNormalForm& nf) {
  switch (nf.type) {
    case HomType::T1: return {false, BUReason::NotBUType1};
    case HomType::T2: return {false, BUReason::NotBUType2};
    case HomType::T3: return {true, BUReason::Type3};
    case HomType::T4: break;
  }
  if (delta(nf.s1) == 0) return {false, BUReason::NotBUType4EvenS1};
  if (nf.r2 == 0) return {false, BUReason::NotBUType4ZeroR2};
  if (nf.r1 != 0 && val2(nf.r1) <= val2(nf.r2)) return {false, BUReason::NotBUType4ValuationFail};
  return {true, BUReason::Type4OddValuation};
}

// ---------------------------------------------------------------------------
// Witnesses

bool in_sigma(int64_t rho_, int64_t gamma_, int64_t xi_, int64_t tau_) {
  if (rho_ == 0 && (gamma_ == 1 || gamma_ == 3) && xi_ == 0 && (tau_ == 0 || tau_ == 1)) return true;
  if (rho_ >= 0 && gamma_ == 0 && tau_ == 0) return true;
  return rho_ == 0 && gamma_ == 2 && xi_ == 0 && tau_ == 0;
}

WitnessPair sigma_table_witness(int64_t rho_, int64_t gamma_, int64_t xi_, int64_t tau_) {
  if (!in_sigma(rho_, gamma_, xi_, tau_)) {
    throw Error(ErrorKind::NotInSigma, "(" + std::to_string(rho_) + "," + std::to_string(gamma_) +
                                           "," + std::to_string(xi_) + "," +
                                           std::to_string(tau_) + ") is not in the table");
  }
  const int64_t dr = delta(rho_), dg = delta(gamma_);
  const int64_t hg = (gamma_ - dg) / 2;
  P2Elem a{U(dr) * V(dg) * w_pow(word_B(), dg * hg), {(rho_ - dr) / 2, hg}};
  P2Elem b{w_pow(word_B(), neg(mul(dr, xi_))), {xi_, tau_}};
  return {std::move(a), std::move(b), WitnessStatus::Generated};
}

WitnessPair type4_odd_witness(int64_t r1, int64_t r2) {
  if (r1 <= 0) throw Error(ErrorKind::PreconditionFail, "type4_odd_witness needs r1 > 0");
  const int64_t e = val2(r1);
  if (r2 != 0 && e > val2(r2)) {
    throw Error(ErrorKind::PreconditionFail, "type4_odd_witness needs e(r1) <= e(r2)");
  }
  const P2Elem c{U(int64_t{1} << e) * V(2), {0, 0}};
  const P2Elem step = c * l_sigma(c) * sigma_sq();
  const int64_t o = odd_part(r1);
  const int64_t m = r2 >> e;
  return {p2_pow(step, (o - 1) / 2) * c, p2_pow(step, m), WitnessStatus::Generated};
}

WitnessPair shift_witness(const WitnessPair& wp, int64_t k1, int64_t k2) {
  return {wp.a * P2Elem{{}, {0, mul(2, k1)}}, wp.b * P2Elem{{}, {0, mul(2, k2)}}, wp.status};
}

// If (a,b) satisfies the three conditions for h, then with X = (1;x)
//   a' l_sigma(b') = X a l_sigma(b) l_sigma(X)^-1 = X b a l_sigma(X)^-1 = b' a',
// and p1 of a' l_sigma(a') and b' is x h(.) x^-1, because p1 kills sigma^2.
WitnessPair transport_witness(const WitnessPair& wp, const Pi1K& x) {
  if (wp.status != WitnessStatus::Generated || x == Pi1K{}) return wp;
  const P2Elem X{{}, x};
  const P2Elem Xi = p2_inv(X);
  return {X * wp.a * p2_inv(l_sigma(X)), X * wp.b * Xi, wp.status};
}

WitnessPair generate_witness(const HomNormalForm& nf) {
  if (classify(nf).has_bu) return {{}, {}, WitnessStatus::NotApplicableBU};
  if (nf.type == HomType::T1 || nf.type == HomType::T2) {
    if (nf.i != 0) return {{}, {}, WitnessStatus::UnsupportedI1};
    const int64_t s = delta(nf.s1);
    const int64_t j = nf.type == HomType::T2 ? 1 : 0;
    return shift_witness(sigma_table_witness(0, 2 * s + 1, 0, j), (nf.s1 - s) / 2, nf.s2);
  }
  // Type 4 from here on.
  if (delta(nf.s1) == 0) {
    return shift_witness(sigma_table_witness(nf.r1, 0, nf.r2, 0), nf.s1 / 2, nf.s2);
  }
  if (nf.r1 == 0) {
    // Non-BU with s1 odd and r1 = 0 forces r2 = 0.
    return shift_witness(sigma_table_witness(0, 2, 0, 0), (nf.s1 - 1) / 2, nf.s2);
  }
  const int64_t o = odd_part(nf.r1);
  const int64_t m = nf.r2 >> val2(nf.r1);
  return shift_witness(type4_odd_witness(nf.r1, nf.r2), sub(nf.s1, o) / 2, sub(nf.s2, m));
}

WitnessCheck verify_witness(const HomPair& h, const P2Elem& a, const P2Elem& b) {
  WitnessCheck r;
  r.cond_i = a * l_sigma(b) == b * a;
  r.cond_ii = p1_sharp(a * l_sigma(a)) == h.f10();
  r.cond_iii = p1_sharp(b) == h.f01();
  return r;
}

FreeWord closed_pF_ba(int64_t a1, int64_t a2, const FreeWord& x, int64_t b1, const FreeWord& y,
                      int64_t m2, int64_t n2) {
  const FreeWord& B = word_B();
  const int64_t d = delta(n2);
  return U(b1) * y * w_pow(B, sub(m2, d)) * U(mul(a1, eps(n2))) *
         w_pow(w_pow(B, d) * V() * U(mul(-2, m2)), a2) * w_pow(B, sub(d, m2)) * theta(m2, d, x);
}

FreeWord closed_pF_a_lsigma_b(int64_t a1, int64_t a2, const FreeWord& x, int64_t m1, int64_t n1,
                              int64_t b1, const FreeWord& y, int64_t n2) {
  const FreeWord& B = word_B();
  const int64_t d = delta(n1), e = eps(n1);
  return U(a1) * V(a2) * x * w_pow(B, sub(m1, d)) * w_pow(w_pow(B, e) * U(-e), b1) *
         w_pow(B, sub(add(mul(-e, b1), d), m1)) * theta(add(m1, mul(e, b1)), d, rho(y)) *
         w_pow(B, delta(n2) * e);
}

// ---------------------------------------------------------------------------
// Obstruction maps

AbKerG mu1_ab(int64_t m1, int64_t /*n1*/, const AbKerG& x) {
  return x.map_linear([&](int64_t k, int64_t l) {
    return basis(k, sub(l, mul(2 * eps(k), m1))) + basis(k, neg(l));
  });
}

namespace {

void require_s(int64_t s) {
  if (s != 0 && s != 1) throw Error(ErrorKind::PreconditionFail, "s must be 0 or 1");
}

}  // namespace

AbKerG mu2_ab(int64_t m1, int64_t n1, int64_t s, const AbKerG& x) {
  require_s(s);
  const int64_t en = eps(n1);
  const int64_t shift = sub(mul(2, n1), 2 * s);
  return x.map_linear([&](int64_t k, int64_t l) {
    return basis(neg(k), add(mul(en * eps(k + 1), l), mul(2 * delta(k), m1)), eps(k) * en) -
           basis(add(k, shift), sub(l, mul(2 * eps(k) * delta(n1 + 1), m1)));
  });
}

AbKerG mu_ab(int64_t n1, int64_t r2, const AbKerG& x) {
  return x.map_linear([&](int64_t k, int64_t l) {
    return basis(k, add(l, mul(2 * eps(k) * delta(n1), r2))) -
           basis(k, sub(l, mul(2 * delta(k), r2)));
  });
}

AbKerG nu_ab(int64_t m1, int64_t n1, int64_t r1, int64_t r2, const AbKerG& x) {
  const int64_t en = eps(n1);
  const int64_t inner = add(m1, mul(2 * delta(n1), r2));
  const int64_t shift_k = mul(2, sub(n1, 1));
  const int64_t shift_l = sub(mul(2 * delta(n1 + 1), m1), mul(en, r1));
  return x.map_linear([&](int64_t k, int64_t l) {
    return basis(neg(k), sub(mul(en * eps(k + 1), l), mul(2 * delta(k), inner)), eps(k) * en) -
           basis(add(k, shift_k), add(l, mul(eps(k), shift_l)));
  });
}

AbKerG rhs_type2(int64_t s, int64_t m1, int64_t n1) {
  require_s(s);
  const int64_t d = delta(n1);
  const int64_t k = sub(mul(2, n1), 2 * s);
  const int64_t two_m1 = mul(2, m1);
  AbKerG x = closed_I_ab(k) - closed_T_ab(neg(two_m1), d) - closed_O_ab(sub(n1, s), neg(two_m1));
  x.add(0, 0, neg(add(m1, d + eps(n1))));
  x.add(0, neg(two_m1), neg(sub(m1, d)));
  x.add(k, neg(mul(delta(n1 + 1), two_m1)), -1);
  x.add(k, 0, 1);
  return x;
}

AbKerG rhs_type4(int64_t r1, int64_t r2, int64_t m1, int64_t n1) {
  const int64_t d = delta(n1);
  const int64_t two_d_r2 = mul(2 * d, r2);
  AbKerG x = closed_J_ab(sub(n1, 1), mul(-2, r2)) - closed_O_ab(sub(n1, 1), two_d_r2) -
             closed_T_ab(two_d_r2, d);
  x.add(mul(2, sub(n1, 1)), sub(mul(2 * delta(n1 + 1), m1), mul(eps(n1), r1)), r2);
  x.add(0, two_d_r2, neg(sub(m1, d)));
  x.add(0, 0, neg(add(sub(mul(d, sub(1, mul(2, r2))), m1), r2)));
  return x;
}

int xi(int64_t n1, int64_t r2, const AbKerG& x) {
  if (r2 == 0) throw Error(ErrorKind::ZeroInput, "xi needs r2 != 0");
  const uint64_t modulus = uint64_t{1} << (val2(r2) + 1);
  const int64_t k0 = sub(n1, 1);
  int64_t parity = 0;
  for (const auto& [key, c] : x.coeffs()) {
    if (key.first != k0) continue;
    const uint64_t al = key.second < 0 ? 0 - static_cast<uint64_t>(key.second)
                                       : static_cast<uint64_t>(key.second);
    if (al % modulus == 0) parity ^= delta(c);
  }
  return static_cast<int>(parity);
}

int xi_all_ones(const AbKerG& x) {
  int64_t parity = 0;
  for (const auto& [key, c] : x.coeffs()) parity ^= delta(c);
  return static_cast<int>(parity);
}

bool obstruction_check_type2(int64_t s, int64_t m1, int64_t n1) {
  return xi_all_ones(rhs_type2(s, m1, n1)) == 1;
}

bool obstruction_check_type4(int64_t r1, int64_t r2, int64_t m1, int64_t n1) {
  if (r2 == 0 || (r1 != 0 && val2(r1) <= val2(r2))) {
    throw Error(ErrorKind::PreconditionFail,
                "obstruction_check_type4 needs r2 != 0 and e(r1) > e(r2) when r1 != 0");
  }
  return xi(n1, r2, rhs_type4(r1, r2, m1, n1)) == 1;
}

}  // namespace kbu
