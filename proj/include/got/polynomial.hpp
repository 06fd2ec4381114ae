#ifndef GOT_POLYNOMIAL_HPP
#define GOT_POLYNOMIAL_HPP

#include "got/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <utility>

namespace got {

using Exponent = std::uint64_t;

/// Exponent pair of a†ᵏ aˡ inside an ordering symbol.
struct Monomial {
  Exponent ad = 0;
  Exponent a = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator+(Monomial l, Monomial r) { return {l.ad + r.ad, l.a + r.a}; }
};

/*
 * Sparse polynomial in two commuting variables with exact coefficients.
 * Terms are kept in a std::map so iteration is lexicographic in the key;
 * zero coefficients are never stored.
 *
 * Key must be totally ordered, value-initialise to the constant monomial and
 * provide operator+ (exponent addition).
 */
template <class Key>
class SparsePoly2 {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;

  SparsePoly2() = default;
  SparsePoly2(const Rational& constant) { add(Key{}, constant); }  // NOLINT: implicit scalar lift

  static SparsePoly2 term(const Key& k, const Rational& c = 1) {
    SparsePoly2 p;
    p.add(k, c);
    return p;
  }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{}); }
  Rational constant() const { return coeff(Key{}); }
  std::size_t size() const { return terms_.size(); }

  SparsePoly2& operator+=(const SparsePoly2& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  SparsePoly2& operator-=(const SparsePoly2& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  SparsePoly2& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly2 operator+(SparsePoly2 l, const SparsePoly2& r) { return l += r; }
  friend SparsePoly2 operator-(SparsePoly2 l, const SparsePoly2& r) { return l -= r; }
  friend SparsePoly2 operator-(SparsePoly2 p) { return p *= Rational(-1); }
  friend SparsePoly2 operator*(SparsePoly2 p, const Rational& s) { return p *= s; }
  friend SparsePoly2 operator*(const Rational& s, SparsePoly2 p) { return p *= s; }

  /// Commutative product.
  friend SparsePoly2 operator*(const SparsePoly2& l, const SparsePoly2& r) {
    SparsePoly2 out;
    for (const auto& [kl, cl] : l.terms_)
      for (const auto& [kr, cr] : r.terms_) out.add(kl + kr, cl * cr);
    return out;
  }

  friend bool operator==(const SparsePoly2&, const SparsePoly2&) = default;

 private:
  map_type terms_;
};

template <class Key>
SparsePoly2<Key> pow(const SparsePoly2<Key>& p, std::uint64_t e) {
  SparsePoly2<Key> result(Rational(1));
  SparsePoly2<Key> base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

/// Commutative polynomial in the symbols a† and a, i.e. the content of an
/// ordering symbol {·}_s. Coefficient map f_{kl}.
using SymbolPoly = SparsePoly2<Monomial>;

inline SymbolPoly poly_mul(const SymbolPoly& p, const SymbolPoly& q) { return p * q; }

inline SymbolPoly monomial(Exponent ad, Exponent a, const Rational& c = 1) {
  return SymbolPoly::term({ad, a}, c);
}

/// ∂/∂a† of a commutative symbol polynomial.
inline SymbolPoly d_ad(const SymbolPoly& p) {
  SymbolPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.ad) out.add({m.ad - 1, m.a}, c * m.ad);
  return out;
}

/// ∂/∂a of a commutative symbol polynomial.
inline SymbolPoly d_a(const SymbolPoly& p) {
  SymbolPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.a) out.add({m.ad, m.a - 1}, c * m.a);
  return out;
}

/// Largest a† + a exponent sum, 0 for the zero polynomial.
inline Exponent total_degree(const SymbolPoly& p) {
  Exponent d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.ad + m.a);
  return d;
}

}  // namespace got

#endif  // GOT_POLYNOMIAL_HPP
