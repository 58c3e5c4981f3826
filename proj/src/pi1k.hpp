#pragma once

#include <cstdint>

#include "errors.hpp"
#include "word.hpp"

namespace kbu {

/// Element (m,n) of Z x| Z with (m1,n1)(m2,n2) = (m1 + (-1)^n1 m2, n1 + n2).
struct Pi1K {
  int64_t m = 0;
  int64_t n = 0;
  friend bool operator==(const Pi1K&, const Pi1K&) = default;
  friend auto operator<=>(const Pi1K&, const Pi1K&) = default;
};

Pi1K k_mul(const Pi1K& a, const Pi1K& b);
Pi1K k_inv(const Pi1K& a);
Pi1K k_pow(const Pi1K& a, int64_t t);
/// c a c^-1
Pi1K k_conj(const Pi1K& c, const Pi1K& a);
bool commutes(const Pi1K& a, const Pi1K& b);

/// The homomorphism F(u,v) -> Z x| Z, u -> (1,0), v -> (0,1).
Pi1K g_word(const FreeWord& w);

/// Isomorphism with h(1,0) = (1,0), h(0,1) = (1,1); h(m,n) = (m + delta(n), n).
Pi1K h_iso(const Pi1K& a);
Pi1K h_iso_inv(const Pi1K& a);

/// A homomorphism Z^2 -> Z x| Z given by the images of (1,0) and (0,1).
class HomPair {
 public:
  /// Throws Error(NonCommuting) when the two images do not commute.
  HomPair(Pi1K f10, Pi1K f01);
  const Pi1K& f10() const noexcept { return f10_; }
  const Pi1K& f01() const noexcept { return f01_; }
  friend bool operator==(const HomPair&, const HomPair&) = default;

 private:
  Pi1K f10_;
  Pi1K f01_;
};

enum class HomType { T1 = 1, T2 = 2, T3 = 3, T4 = 4 };

/// Conjugacy normal form. For T1..T3 the fields i, s1, s2 are used; for T4 the
/// fields r1, r2, s1, s2 (r1 >= 0, and r2 >= 0 whenever r1 == 0).
struct HomNormalForm {
  HomType type = HomType::T1;
  int64_t i = 0;
  int64_t s1 = 0;
  int64_t s2 = 0;
  int64_t r1 = 0;
  int64_t r2 = 0;

  /// The pair of images this normal form stands for.
  HomPair pair() const;
  friend bool operator==(const HomNormalForm&, const HomNormalForm&) = default;
};

struct Normalized {
  HomNormalForm nf;
  /// k_conj(conjugator, h.f10()) == nf.pair().f10(), likewise for f01.
  Pi1K conjugator;
};

Normalized normalize_hom(const HomPair& h);

}  // namespace kbu
