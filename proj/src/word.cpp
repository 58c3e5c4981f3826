#include "word.hpp"

#include <cstdint>

namespace kbu {

namespace {
// Refuse to materialise words beyond this many syllables.
constexpr size_t kMaxSyllables = size_t{1} << 26;
}  // namespace

void FreeWord::append(Gen g, int64_t exp) {
  if (exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == g) {
    syl_.back().exp = checked::add(syl_.back().exp, exp);
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  if (syl_.size() >= kMaxSyllables) throw OverflowError("word too long");
  syl_.push_back({g, exp});
}

FreeWord FreeWord::from_syllables(std::span<const Syllable> stream) {
  FreeWord w;
  w.syl_.reserve(stream.size());
  for (const auto& s : stream) w.append(s.gen, s.exp);
  return w;
}

FreeWord FreeWord::gen(Gen g, int64_t exp) {
  FreeWord w;
  w.append(g, exp);
  return w;
}

int64_t FreeWord::length() const {
  int64_t n = 0;
  for (const auto& s : syl_) n = checked::add(n, s.exp < 0 ? checked::neg(s.exp) : s.exp);
  return n;
}

std::vector<std::pair<int, int64_t>> FreeWord::key() const {
  std::vector<std::pair<int, int64_t>> k;
  k.reserve(syl_.size());
  for (const auto& s : syl_) k.emplace_back(static_cast<int>(s.gen), s.exp);
  return k;
}

FreeWord w_identity() { return {}; }

FreeWord w_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  r.syl_.reserve(a.syl_.size() + b.syl_.size());
  for (const auto& s : b.syl_) r.append(s.gen, s.exp);
  return r;
}

FreeWord w_inv(const FreeWord& a) {
  const auto& s = a.syllables();
  std::vector<Syllable> out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back({it->gen, checked::neg(it->exp)});
  return FreeWord::from_syllables(out);
}

FreeWord w_pow(const FreeWord& a, int64_t n) {
  if (n == 0 || a.is_identity()) return {};
  const FreeWord base = n < 0 ? w_inv(a) : a;
  // |n| without overflowing on INT64_MIN
  const uint64_t times = n < 0 ? uint64_t(0) - uint64_t(n) : uint64_t(n);
  const auto& s = base.syllables();

  // Peel the conjugating prefix/suffix: base = c x c^-1.
  size_t i = 0, j = s.size() - 1;
  while (i < j && s[i].gen == s[j].gen && s[i].exp == -s[j].exp) {
    ++i;
    --j;
  }
  std::vector<Syllable> out(s.begin(), s.begin() + i);
  if (i == j) {
    if (times > uint64_t(INT64_MAX)) throw OverflowError("exponent overflow in power");
    out.push_back({s[i].gen, checked::mul(s[i].exp, int64_t(times))});
  } else {
    if (times > kMaxSyllables / (j - i + 1)) throw OverflowError("word too long");
    for (uint64_t t = 0; t < times; ++t) out.insert(out.end(), s.begin() + i, s.begin() + j + 1);
  }
  out.insert(out.end(), s.begin() + j + 1, s.end());
  return FreeWord::from_syllables(out);
}

FreeWord w_conj(const FreeWord& c, const FreeWord& a) { return w_mul(w_mul(c, a), w_inv(c)); }

FreeWord w_commutator(const FreeWord& a, const FreeWord& b) {
  return w_mul(w_mul(a, b), w_mul(w_inv(a), w_inv(b)));
}

FreeWord apply_endo(const FreeWord& img_u, const FreeWord& img_v, const FreeWord& w) {
  std::vector<Syllable> out;
  for (const auto& s : w.syllables()) {
    const FreeWord piece = w_pow(s.gen == Gen::U ? img_u : img_v, s.exp);
    out.insert(out.end(), piece.syllables().begin(), piece.syllables().end());
  }
  return FreeWord::from_syllables(out);
}

const FreeWord& word_B() {
  static const FreeWord b = FreeWord::from_syllables(
      {{Gen::U, 1}, {Gen::V, 1}, {Gen::U, 1}, {Gen::V, -1}});
  return b;
}

FreeWord word_Bkl(int64_t k, int64_t l) {
  return FreeWord::from_syllables({{Gen::V, k},
                                   {Gen::U, l},
                                   {Gen::U, 1},
                                   {Gen::V, 1},
                                   {Gen::U, 1},
                                   {Gen::V, -1},
                                   {Gen::U, checked::neg(l)},
                                   {Gen::V, checked::neg(k)}});
}

}  // namespace kbu
