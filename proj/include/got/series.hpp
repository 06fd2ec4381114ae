#ifndef GOT_SERIES_HPP
#define GOT_SERIES_HPP

#include "got/engine.hpp"

#include <stdexcept>
#include <vector>

namespace got {

/*
 * Formal power series Σ_{k≤K} λᵏ Cₖ truncated at order K. Each coefficient
 * Cₖ is an operator stored as its symbol in one fixed working order, i.e.
 * the series stands for Σ λᵏ {Cₖ}_t.
 */
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t order, OrderParam working_order)
      : coeffs_(order + 1), working_(std::move(working_order)) {}

  static TruncatedSeries constant(SymbolPoly c, std::size_t order, OrderParam t) {
    TruncatedSeries s(order, std::move(t));
    s.coeffs_[0] = std::move(c);
    return s;
  }

  /// Series with scalar coefficients, extra entries beyond the order dropped.
  static TruncatedSeries scalars(const std::vector<Rational>& cs, std::size_t order, OrderParam t) {
    TruncatedSeries s(order, std::move(t));
    for (std::size_t k = 0; k < cs.size() && k <= order; ++k) s.coeffs_[k] = SymbolPoly(cs[k]);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const OrderParam& working_order() const { return working_; }
  const SymbolPoly& operator[](std::size_t k) const { return coeffs_.at(k); }
  SymbolPoly& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<SymbolPoly>& coeffs() const { return coeffs_; }

  bool is_scalar() const {
    for (const auto& c : coeffs_)
      if (!c.is_constant()) return false;
    return true;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<SymbolPoly> coeffs_;
  OrderParam working_;
};

/// How two coefficients combine: as operators (merge_blocks, noncommutative)
/// or as symbols inside one ordering bracket (commutative poly_mul).
enum class Product { operator_product, symbol_product };

namespace detail {

inline void require_compatible(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.order() != g.order()) throw std::invalid_argument("series: mismatched truncation order");
  if (!(f.working_order() == g.working_order())) throw std::invalid_argument("series: mismatched working order");
}

inline SymbolPoly coeff_mul(const SymbolPoly& l, const SymbolPoly& r, const OrderParam& t, Product kind) {
  if (l.is_zero() || r.is_zero()) return {};
  if (kind == Product::symbol_product || l.is_constant() || r.is_constant()) return l * r;
  return merge_blocks({l, t}, {r, t}, t).poly;
}

}  // namespace detail

inline TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g) {
  detail::require_compatible(f, g);
  for (std::size_t k = 0; k <= f.order(); ++k) f[k] += g[k];
  return f;
}

inline TruncatedSeries operator-(TruncatedSeries f, const TruncatedSeries& g) {
  detail::require_compatible(f, g);
  for (std::size_t k = 0; k <= f.order(); ++k) f[k] -= g[k];
  return f;
}

inline TruncatedSeries operator*(TruncatedSeries f, const Rational& c) {
  for (std::size_t k = 0; k <= f.order(); ++k) f[k] *= c;
  return f;
}

/// Cauchy product truncated at K; f's coefficient stands left of g's.
inline TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g,
                                  Product kind = Product::operator_product) {
  detail::require_compatible(f, g);
  TruncatedSeries out(f.order(), f.working_order());
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= f.order(); ++j)
      out[i + j] += detail::coeff_mul(f[i], g[j], f.working_order(), kind);
  }
  return out;
}

inline TruncatedSeries series_pow(const TruncatedSeries& f, std::uint64_t n,
                                  Product kind = Product::operator_product) {
  auto out = TruncatedSeries::constant(SymbolPoly(Rational(1)), f.order(), f.working_order());
  for (std::uint64_t i = 0; i < n; ++i) out = series_mul(out, f, kind);
  return out;
}

/// Σ_{k≤K} fᵏ/k!; requires a zero constant coefficient.
inline TruncatedSeries series_exp(const TruncatedSeries& f, Product kind = Product::operator_product) {
  if (!f[0].is_zero()) throw std::invalid_argument("series_exp: constant coefficient must be zero");
  auto sum = TruncatedSeries::constant(SymbolPoly(Rational(1)), f.order(), f.working_order());
  auto power = sum;
  for (std::size_t k = 1; k <= f.order(); ++k) {
    power = series_mul(power, f, kind) * Rational(1, k);
    sum = sum + power;
  }
  return sum;
}

/// g with f·g = 1 up to order K; requires the constant coefficient to be 1.
inline TruncatedSeries series_geom_inverse(const TruncatedSeries& f) {
  if (!(f[0] == SymbolPoly(Rational(1))))
    throw std::invalid_argument("series_geom_inverse: constant coefficient must be 1");
  TruncatedSeries g(f.order(), f.working_order());
  g[0] = SymbolPoly(Rational(1));
  for (std::size_t n = 1; n <= f.order(); ++n) {
    SymbolPoly acc;
    for (std::size_t j = 1; j <= n; ++j)
      acc += detail::coeff_mul(f[j], g[n - j], f.working_order(), Product::operator_product);
    g[n] = -acc;
  }
  return g;
}

/// f∘g = Σ fₖ gᵏ; g must have zero constant term and scalar coefficients.
inline TruncatedSeries series_substitute(const TruncatedSeries& f, const TruncatedSeries& g) {
  detail::require_compatible(f, g);
  if (!g[0].is_zero()) throw std::invalid_argument("series_substitute: inner series needs zero constant term");
  if (!g.is_scalar()) throw std::invalid_argument("series_substitute: inner series must be scalar");
  TruncatedSeries out(f.order(), f.working_order());
  auto gk = TruncatedSeries::constant(SymbolPoly(Rational(1)), f.order(), f.working_order());
  for (std::size_t k = 0; k <= f.order(); ++k) {
    if (!f[k].is_zero())
      for (std::size_t j = k; j <= f.order(); ++j) out[j] += f[k] * gk[j].constant();
    gk = series_mul(gk, g, Product::symbol_product);
  }
  return out;
}

/// λ as a series (coefficient 1 at order 1).
inline TruncatedSeries series_variable(std::size_t order, OrderParam t) {
  return TruncatedSeries::scalars({Rational(0), Rational(1)}, order, std::move(t));
}

/// Applies a coefficient-wise map to every coefficient.
template <class F>
TruncatedSeries map_coeffs(const TruncatedSeries& f, F&& fn) {
  TruncatedSeries out(f.order(), f.working_order());
  for (std::size_t k = 0; k <= f.order(); ++k) out[k] = fn(f[k]);
  return out;
}

}  // namespace got

#endif  // GOT_SERIES_HPP
