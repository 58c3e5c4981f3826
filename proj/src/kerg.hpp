#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "p2.hpp"
#include "pi1k.hpp"
#include "word.hpp"

namespace kbu {

/// Schreier generator Gamma_{k,l} = v^k u^l v u^l v^{-k-1} (l != 0), raised to
/// exp = +-1.
struct GammaGen {
  int64_t k;
  int64_t l;
  int exp;
  friend bool operator==(const GammaGen&, const GammaGen&) = default;
};

FreeWord gamma_word(int64_t k, int64_t l);

struct BFactor {
  int64_t k;
  int64_t l;
  int64_t exp;
  friend bool operator==(const BFactor&, const BFactor&) = default;
};

/// Reduced word in the free basis {B_{k,l}} of ker g.
class BBasisWord {
 public:
  BBasisWord() = default;
  static BBasisWord from_factors(const std::vector<BFactor>& stream);
  static BBasisWord from_factors(std::initializer_list<BFactor> stream) {
    return from_factors(std::vector<BFactor>(stream));
  }

  const std::vector<BFactor>& factors() const noexcept { return f_; }
  bool empty() const noexcept { return f_.empty(); }

  void append(int64_t k, int64_t l, int64_t exp);
  BBasisWord inverse() const;

  friend bool operator==(const BBasisWord&, const BBasisWord&) = default;
  friend BBasisWord operator*(const BBasisWord& a, const BBasisWord& b);

 private:
  std::vector<BFactor> f_;
};

/// Element of the free abelian group on {B_{k,l}}; zero coefficients are never
/// stored, keys sorted lexicographically by (k,l).
class AbKerG {
 public:
  using Key = std::pair<int64_t, int64_t>;

  AbKerG() = default;
  AbKerG(std::initializer_list<std::pair<const Key, int64_t>> init);

  void add(int64_t k, int64_t l, int64_t c);
  const std::map<Key, int64_t>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int64_t coeff(int64_t k, int64_t l) const;

  AbKerG& operator+=(const AbKerG& o);
  AbKerG& operator-=(const AbKerG& o);
  friend AbKerG operator+(AbKerG a, const AbKerG& b) { return a += b; }
  friend AbKerG operator-(AbKerG a, const AbKerG& b) { return a -= b; }
  AbKerG scaled(int64_t s) const;

  /// Linear extension of a map given on basis elements.
  template <class F>
  AbKerG map_linear(F&& on_basis) const {
    AbKerG out;
    for (const auto& [key, c] : c_) {
      AbKerG img = on_basis(key.first, key.second);
      out += img.scaled(c);
    }
    return out;
  }

  friend bool operator==(const AbKerG&, const AbKerG&) = default;

 private:
  std::map<Key, int64_t> c_;
};

/// Single basis element c * B_{k,l}.
AbKerG basis(int64_t k, int64_t l, int64_t c = 1);

bool in_kerg(const FreeWord& w);

/// Reidemeister-Schreier rewrite over the transversal {v^k u^l}.
/// Throws Error(NotInKernel) when g(w) != (0,0).
std::vector<GammaGen> rs_rewrite(const FreeWord& w);
FreeWord from_gammas(const std::vector<GammaGen>& gs);

BBasisWord gamma_to_b(const GammaGen& g);
std::vector<GammaGen> b_to_gamma(int64_t k, int64_t l);

BBasisWord to_b_basis(const FreeWord& w);
FreeWord from_b_basis(const BBasisWord& bw);

AbKerG abelianize(const BBasisWord& bw);

AbKerG theta_ab(int64_t m, int64_t n, const AbKerG& x);
AbKerG rho_ab(const AbKerG& x);
AbKerG c_ab(int64_t p, int64_t q, const AbKerG& x);

/// x -> v^p u^q x u^-q v^-p on ker g. Throws Error(NotInKernel).
FreeWord c_pq(int64_t p, int64_t q, const FreeWord& x);

FreeWord special_T(int64_t k, int64_t r);
FreeWord special_I(int64_t k);
FreeWord special_O(int64_t k, int64_t l);
FreeWord special_J(int64_t k, int64_t l);

BBasisWord closed_T_word(int64_t k, int64_t r);
BBasisWord closed_I_word(int64_t k);
BBasisWord closed_J_word(int64_t k, int64_t l);

AbKerG closed_T_ab(int64_t k, int64_t r);
AbKerG closed_I_ab(int64_t k);
AbKerG closed_O_ab(int64_t k, int64_t l);
AbKerG closed_J_ab(int64_t k, int64_t l);

/// Explicit conjugator data: image(B_{k,l}) = conj * B_{k',l'}^sign * conj^-1.
struct ConjData {
  FreeWord conj;
  int64_t k;
  int64_t l;
  int sign;
};

ConjData conj_data_theta(int64_t m, int64_t n, int64_t k, int64_t l);
ConjData conj_data_rho(int64_t k, int64_t l);
ConjData conj_data_c(int64_t p, int64_t q, int64_t k, int64_t l);

}  // namespace kbu
