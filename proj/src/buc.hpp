#pragma once

#include <cstdint>
#include <string_view>

#include "kerg.hpp"
#include "p2.hpp"
#include "pi1k.hpp"

namespace kbu {

/// 2-adic valuation; throws Error(ZeroInput) for 0.
int64_t val2(int64_t t);
/// |r| / 2^val2(r); throws Error(ZeroInput) for 0.
int64_t odd_part(int64_t r);

enum class BUReason {
  Type3,
  Type4OddValuation,
  NotBUType1,
  NotBUType2,
  NotBUType4EvenS1,
  NotBUType4ValuationFail,
  NotBUType4ZeroR2,
};

std::string_view reason_name(BUReason r);

struct BUVerdict {
  bool has_bu;
  BUReason reason;
  friend bool operator==(const BUVerdict&, const BUVerdict&) = default;
};

/// Borsuk-Ulam verdict for tau_1: BU iff Type 3, or Type 4 with s1 odd,
/// r2 != 0 and (r1 == 0 or val2(r1) > val2(r2)).
BUVerdict classify(const HomNormalForm& nf);

enum class WitnessStatus { Generated, UnsupportedI1, NotApplicableBU };

std::string_view status_name(WitnessStatus s);

struct WitnessPair {
  P2Elem a;
  P2Elem b;
  WitnessStatus status = WitnessStatus::Generated;
};

/// Membership in the table of directly solvable classes
///   {(0,2s+1,0,j) : s,j in {0,1}} u {(r1,0,r2,0) : r1 >= 0} u {(0,2,0,0)}.
bool in_sigma(int64_t rho_, int64_t gamma_, int64_t xi_, int64_t tau_);

/// Witness for the class (1,0) -> (rho_,gamma_), (0,1) -> (xi_,tau_).
/// Throws Error(NotInSigma).
WitnessPair sigma_table_witness(int64_t rho_, int64_t gamma_, int64_t xi_, int64_t tau_);

/// Witness from c = (u^(2^e(r1)) v^2; 0,0): a = (c sigma)^o(r1) sigma^-1 and
/// b = (c sigma)^(2m), m = r2 / 2^e(r1), written without sigma as
/// a = (c l_sigma(c) sigma^2)^((o-1)/2) c, b = (c l_sigma(c) sigma^2)^m.
/// Certifies (1,0) -> (r1, 2 o(r1)), (0,1) -> (r2, 2m).
/// Requires r1 > 0 and (r2 == 0 or val2(r1) <= val2(r2)).
WitnessPair type4_odd_witness(int64_t r1, int64_t r2);

/// a' = a (1;0,2k1), b' = b (1;0,2k2): moves the certified class by (0,4k1)
/// on (1,0) and by (0,2k2) on (0,1).
WitnessPair shift_witness(const WitnessPair& wp, int64_t k1, int64_t k2);

/// Moves a witness for h to one for the conjugate x h x^-1:
/// a' = X a l_sigma(X)^-1, b' = X b X^-1 with X = (1; x).
WitnessPair transport_witness(const WitnessPair& wp, const Pi1K& x);

/// Witness for the homomorphism nf.pair(), or a status explaining why none is
/// produced.
WitnessPair generate_witness(const HomNormalForm& nf);

struct WitnessCheck {
  bool cond_i = false;    // a l_sigma(b) = b a
  bool cond_ii = false;   // (p1)_#(a l_sigma(a)) = h(1,0)
  bool cond_iii = false;  // (p1)_#(b) = h(0,1)
  bool all() const noexcept { return cond_i && cond_ii && cond_iii; }
};

WitnessCheck verify_witness(const HomPair& h, const P2Elem& a, const P2Elem& b);

/// Closed forms of p_F(b a) and p_F(a l_sigma(b)) for a = (u^a1 v^a2 x; m1,n1)
/// and b = (u^b1 y; m2,n2) with x, y in ker g.
FreeWord closed_pF_ba(int64_t a1, int64_t a2, const FreeWord& x, int64_t b1, const FreeWord& y,
                      int64_t m2, int64_t n2);
FreeWord closed_pF_a_lsigma_b(int64_t a1, int64_t a2, const FreeWord& x, int64_t m1, int64_t n1,
                              int64_t b1, const FreeWord& y, int64_t n2);

// ---------------------------------------------------------------------------
// Obstruction maps on the abelianised normal closure of sigma^2.

AbKerG mu1_ab(int64_t m1, int64_t n1, const AbKerG& x);
AbKerG mu2_ab(int64_t m1, int64_t n1, int64_t s, const AbKerG& x);
AbKerG mu_ab(int64_t n1, int64_t r2, const AbKerG& x);
AbKerG nu_ab(int64_t m1, int64_t n1, int64_t r1, int64_t r2, const AbKerG& x);

/// Constant side of the abelian equation a non-BU Type-3 class would have to
/// satisfy (class (0,2s)/(0,1), s in {0,1}).
AbKerG rhs_type2(int64_t s, int64_t m1, int64_t n1);
/// Same for the Type-4 class (r1,2)/(r2,0).
AbKerG rhs_type4(int64_t r1, int64_t r2, int64_t m1, int64_t n1);

/// xi_{n1,r2}: counts mod 2 the coefficients at B_{n1-1,l} with
/// 2^(val2(r2)+1) | l. Throws Error(ZeroInput) for r2 == 0.
int xi(int64_t n1, int64_t r2, const AbKerG& x);
/// Total coefficient sum mod 2.
int xi_all_ones(const AbKerG& x);

/// Free parameters (m1,n1) of a hypothetical witness plus the class data.
struct ObstructionParams {
  int64_t m1 = 0;
  int64_t n1 = 0;
  int64_t r1 = 0;
  int64_t r2 = 0;
  int64_t s = 0;
};

bool obstruction_check_type2(int64_t s, int64_t m1, int64_t n1);
/// Requires r2 != 0 and (r1 == 0 or val2(r1) > val2(r2)).
bool obstruction_check_type4(int64_t r1, int64_t r2, int64_t m1, int64_t n1);
inline bool obstruction_check_type2(const ObstructionParams& p) {
  return obstruction_check_type2(p.s, p.m1, p.n1);
}
inline bool obstruction_check_type4(const ObstructionParams& p) {
  return obstruction_check_type4(p.r1, p.r2, p.m1, p.n1);
}

}  // namespace kbu
