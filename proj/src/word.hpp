#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"

namespace kbu {

enum class Gen : uint8_t { U, V };

struct Syllable {
  Gen gen;
  int64_t exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Element of the free group F(u,v), always stored freely reduced: adjacent
/// syllables carry different generators and no exponent is zero. Because the
/// representation is canonical, == is group equality.
class FreeWord {
 public:
  FreeWord() = default;

  /// Reduces an arbitrary syllable stream (zero exponents and repeated
  /// generators allowed).
  static FreeWord from_syllables(std::span<const Syllable> stream);
  static FreeWord from_syllables(std::initializer_list<Syllable> stream) {
    return from_syllables(std::span<const Syllable>(stream.begin(), stream.size()));
  }
  static FreeWord gen(Gen g, int64_t exp = 1);

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool is_identity() const noexcept { return syl_.empty(); }
  /// Number of letters (sum of |exp|).
  int64_t length() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    return a.key() <=> b.key();
  }

 private:
  // Appends one syllable, merging with / cancelling against the tail.
  void append(Gen g, int64_t exp);
  std::vector<std::pair<int, int64_t>> key() const;

  std::vector<Syllable> syl_;

  friend FreeWord w_mul(const FreeWord& a, const FreeWord& b);
};

FreeWord w_identity();
FreeWord w_mul(const FreeWord& a, const FreeWord& b);
FreeWord w_inv(const FreeWord& a);
FreeWord w_pow(const FreeWord& a, int64_t n);
/// c a c^-1
FreeWord w_conj(const FreeWord& c, const FreeWord& a);
/// a b a^-1 b^-1
FreeWord w_commutator(const FreeWord& a, const FreeWord& b);

/// Image of w under the endomorphism u -> img_u, v -> img_v.
FreeWord apply_endo(const FreeWord& img_u, const FreeWord& img_v, const FreeWord& w);

/// B = u v u v^-1
const FreeWord& word_B();
/// B_{k,l} = v^k u^l B u^-l v^-k
FreeWord word_Bkl(int64_t k, int64_t l);

inline FreeWord operator*(const FreeWord& a, const FreeWord& b) { return w_mul(a, b); }

inline FreeWord U(int64_t e = 1) { return FreeWord::gen(Gen::U, e); }
inline FreeWord V(int64_t e = 1) { return FreeWord::gen(Gen::V, e); }

}  // namespace kbu
