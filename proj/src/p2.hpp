#pragma once

#include <cstdint>
#include <tuple>

#include "pi1k.hpp"
#include "word.hpp"

namespace kbu {

/// Element (w; m,n) of the pure braid group P2(K^2) = F(u,v) x|_theta (Z x| Z).
/// (w;0,0) is the inclusion of F(u,v); .w is the (non-homomorphic) projection.
struct P2Elem {
  FreeWord w;
  Pi1K q;
  friend bool operator==(const P2Elem&, const P2Elem&) = default;
};

/// The automorphism theta(m,n) of F(u,v):
///   u -> B^(m-d) u^e B^(-m+d),  v -> B^m v u^(-2m) B^(-m+d)
/// with d = delta(n), e = eps(n). Depends only on m and the parity of n.
FreeWord theta(int64_t m, int64_t n, const FreeWord& w);
inline FreeWord theta(const Pi1K& q, const FreeWord& w) { return theta(q.m, q.n, w); }

P2Elem p2_identity();
P2Elem p2_mul(const P2Elem& a, const P2Elem& b);
P2Elem p2_inv(const P2Elem& a);
P2Elem p2_pow(const P2Elem& a, int64_t t);
inline P2Elem operator*(const P2Elem& a, const P2Elem& b) { return p2_mul(a, b); }

/// sigma^2 = (B; 0,0)
P2Elem sigma_sq();

/// rho = p_F . l_sigma . iota, evaluated letter by letter through the cocycle
/// rule rho(wz) = rho(w) theta(g(w))(rho(z)).
FreeWord rho(const FreeWord& w);

/// Conjugation by sigma.
P2Elem l_sigma(const P2Elem& a);

/// (p_1)_#: forget the second strand.
inline Pi1K p1_sharp(const P2Elem& a) { return a.q; }

struct SplitNormal {
  int64_t r;
  int64_t s;
  /// w = u^r v^s x with x in ker g
  FreeWord x;
};
SplitNormal split_normal(const FreeWord& w);

}  // namespace kbu
