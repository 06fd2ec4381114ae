#ifndef GOT_SPECIAL_POLY_HPP
#define GOT_SPECIAL_POLY_HPP

#include "got/polynomial.hpp"
#include "got/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace got {

struct XYMonomial {
  Exponent x = 0;
  Exponent y = 0;

  friend auto operator<=>(const XYMonomial&, const XYMonomial&) = default;
  friend XYMonomial operator+(XYMonomial l, XYMonomial r) { return {l.x + r.x, l.y + r.y}; }
};

/// Polynomial in commuting x, y; holds H_{m,n}(x,y) and h_{m,n}(x,y|τ).
using BivariatePoly = SparsePoly2<XYMonomial>;

inline BivariatePoly xy_term(Exponent x, Exponent y, const Rational& c = 1) { return BivariatePoly::term({x, y}, c); }

/// Dense univariate polynomial, coeffs[i] multiplies xⁱ. No trailing zeros.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// h_{m,n}(x,y|τ) = Σᵢ C(m,i)C(n,i) i! τⁱ xᵐ⁻ⁱ yⁿ⁻ⁱ.
inline BivariatePoly hermite2_incomplete(Exponent m, Exponent n, const Rational& tau) {
  BivariatePoly out;
  Rational ti = 1;
  for (Exponent i = 0; i <= std::min(m, n); ++i) {
    out.add({m - i, n - i}, Rational(pairing_count(m, n, i)) * ti);
    ti *= tau;
  }
  return out;
}

/// Two-variable Hermite polynomial H_{m,n}(x,y) = h_{m,n}(x,y|−1).
inline BivariatePoly hermite2(Exponent m, Exponent n) { return hermite2_incomplete(m, n, Rational(-1)); }

/// Generalised Laguerre L_n^α(x) = Σᵢ (−1)ⁱ C(n+α, n−i) xⁱ/i!. Negative α
/// uses the generalised binomial, so every integer α is accepted.
inline UnivariatePoly laguerre(std::uint64_t n, std::int64_t alpha = 0) {
  std::vector<Rational> c(n + 1);
  const BigInt top = BigInt(n) + alpha;
  for (std::uint64_t i = 0; i <= n; ++i) {
    Rational v(binomial(top, n - i), factorial(i));
    c[i] = (i % 2) ? Rational(-v) : v;
  }
  return UnivariatePoly(std::move(c));
}

/// L(c·x·y) as a bivariate polynomial.
inline BivariatePoly compose_xy(const UnivariatePoly& l, const Rational& c) {
  BivariatePoly out;
  Rational ck = 1;
  for (std::size_t k = 0; k < l.coeffs().size(); ++k) {
    out.add({k, k}, l.coeffs()[k] * ck);
    ck *= c;
  }
  return out;
}

/// p · xᵈˣ yᵈʸ for signed shifts; throws if a negative power would remain.
inline BivariatePoly shift_xy(const BivariatePoly& p, std::int64_t dx, std::int64_t dy) {
  BivariatePoly out;
  for (const auto& [m, c] : p.terms()) {
    const auto x = static_cast<std::int64_t>(m.x) + dx;
    const auto y = static_cast<std::int64_t>(m.y) + dy;
    if (x < 0 || y < 0) throw std::domain_error("shift_xy: result is not a polynomial");
    out.add({static_cast<Exponent>(x), static_cast<Exponent>(y)}, c);
  }
  return out;
}

/// σᵈ p(x/σ, y/σ) for rational σ ≠ 0.
inline BivariatePoly rescale(const BivariatePoly& p, Exponent degree, const Rational& sigma) {
  if (sigma == 0) throw std::domain_error("rescale: sigma must be non-zero");
  BivariatePoly out;
  for (const auto& [m, c] : p.terms()) {
    const auto deficit = static_cast<std::int64_t>(degree) - static_cast<std::int64_t>(m.x + m.y);
    const Rational f = deficit >= 0 ? pow(sigma, static_cast<std::uint64_t>(deficit))
                                    : Rational(1) / pow(sigma, static_cast<std::uint64_t>(-deficit));
    out.add(m, c * f);
  }
  return out;
}

/// σᵈ p(x/σ, y/σ) given only σ², for polynomials whose monomial degrees all
/// differ from d by an even non-negative amount (Hermite-type polynomials).
/// This keeps rescalings by √κ inside exact rational arithmetic; σ² = 0 is
/// the limit that keeps only the top-degree part.
inline BivariatePoly rescale_even(const BivariatePoly& p, Exponent degree, const Rational& sigma_sq) {
  BivariatePoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.x + m.y > degree || (degree - m.x - m.y) % 2)
      throw std::domain_error("rescale_even: degree deficit must be even and non-negative");
    out.add(m, c * pow(sigma_sq, (degree - m.x - m.y) / 2));
  }
  return out;
}

/// Swaps the roles of x and y.
inline BivariatePoly swap_xy(const BivariatePoly& p) {
  BivariatePoly out;
  for (const auto& [m, c] : p.terms()) out.add({m.y, m.x}, c);
  return out;
}

/// Reads x as a† and y as a.
inline SymbolPoly to_symbol_poly(const BivariatePoly& p) {
  SymbolPoly out;
  for (const auto& [m, c] : p.terms()) out.add({m.x, m.y}, c);
  return out;
}

struct GeneratingCoefficient {
  Exponent m = 0;
  Exponent n = 0;
  BivariatePoly from_series;  // m! n! [λᵐμⁿ] e^{λx+μy+τλμ}
  BivariatePoly closed_form;  // h_{m,n}(x,y|τ)
  bool match() const { return from_series == closed_form; }
};

struct GeneratingVerdict {
  std::vector<GeneratingCoefficient> coefficients;
  bool pass() const {
    for (const auto& c : coefficients)
      if (!c.match()) return false;
    return true;
  }
};

/*
 * Expands e^{λx + μy + τλμ} as a bivariate series truncated at λ^maxM μ^maxN
 * (plain Σ Fᵏ/k! on a coefficient grid) and compares every coefficient,
 * scaled by m! n!, against hermite2_incomplete.
 */
inline GeneratingVerdict generating_check_incomplete(Exponent max_m, Exponent max_n, const Rational& tau) {
  using Grid = std::vector<std::vector<BivariatePoly>>;
  const auto rows = max_m + 1;
  const auto cols = max_n + 1;
  auto mul = [&](const Grid& f, const Grid& g) {
    Grid out(rows, std::vector<BivariatePoly>(cols));
    for (Exponent i = 0; i < rows; ++i)
      for (Exponent j = 0; j < cols; ++j) {
        if (f[i][j].is_zero()) continue;
        for (Exponent k = 0; i + k < rows; ++k)
          for (Exponent l = 0; j + l < cols; ++l) out[i + k][j + l] += f[i][j] * g[k][l];
      }
    return out;
  };
  Grid exponent(rows, std::vector<BivariatePoly>(cols));
  if (rows > 1) exponent[1][0] = xy_term(1, 0);
  if (cols > 1) exponent[0][1] = xy_term(0, 1);
  if (rows > 1 && cols > 1) exponent[1][1] = BivariatePoly(tau);

  Grid sum(rows, std::vector<BivariatePoly>(cols));
  Grid power(rows, std::vector<BivariatePoly>(cols));
  power[0][0] = BivariatePoly(Rational(1));
  for (Exponent k = 0; k <= max_m + max_n; ++k) {
    const Rational inv_fact(1, factorial(k));
    for (Exponent i = 0; i < rows; ++i)
      for (Exponent j = 0; j < cols; ++j) sum[i][j] += power[i][j] * inv_fact;
    power = mul(power, exponent);
  }

  GeneratingVerdict verdict;
  for (Exponent i = 0; i < rows; ++i)
    for (Exponent j = 0; j < cols; ++j)
      verdict.coefficients.push_back(
          {i, j, sum[i][j] * Rational(factorial(i) * factorial(j)), hermite2_incomplete(i, j, tau)});
  return verdict;
}

}  // namespace got

#endif  // GOT_SPECIAL_POLY_HPP
