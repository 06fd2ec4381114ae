#ifndef GOT_BARGMANN_HPP
#define GOT_BARGMANN_HPP

// Exact reference representation: a acts as d/dz and a† as multiplication by
// z on polynomials of bounded degree. Deliberately independent of the
// contraction engine; the only shared ingredient is the expansion of an
// s-ordered monomial into normal order.

#include "got/algebra.hpp"

#include <stdexcept>
#include <vector>

namespace got::bargmann {

struct OracleConfig {
  std::size_t cutoff = 16;  // D: highest representable power of z
};

class DegreeOverflow : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Polynomial in z, coeffs[k] multiplies zᵏ, trailing zeros trimmed.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static ZPoly basis(std::size_t k, const Rational& c = 1) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return ZPoly(std::move(v));
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  ZPoly& operator+=(const ZPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  friend ZPoly operator+(ZPoly l, const ZPoly& r) { return l += r; }
  friend ZPoly operator*(ZPoly p, const Rational& c) {
    for (auto& x : p.coeffs_) x *= c;
    p.trim();
    return p;
  }
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

inline ZPoly apply_generator(Generator g, const ZPoly& p, const OracleConfig& cfg) {
  if (p.is_zero()) return p;
  const auto& c = p.coeffs();
  if (g == Generator::AD) {
    if (static_cast<std::size_t>(p.degree()) + 1 > cfg.cutoff)
      throw DegreeOverflow("a† raises degree beyond cutoff " + std::to_string(cfg.cutoff));
    std::vector<Rational> out(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k];
    return ZPoly(std::move(out));
  }
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * k;
  return ZPoly(std::move(out));
}

/// a†ᵏ aˡ (normal order) applied to p: zʲ ↦ j!/(j−l)! zʲ⁻ˡ⁺ᵏ.
inline ZPoly apply_normal_monomial(Exponent ad, Exponent a, const ZPoly& p, const OracleConfig& cfg) {
  const auto& c = p.coeffs();
  if (c.size() <= a) return {};
  const std::size_t top = c.size() - 1 - a + ad;
  if (ad > 0 && top > cfg.cutoff)
    throw DegreeOverflow("a† raises degree beyond cutoff " + std::to_string(cfg.cutoff));
  std::vector<Rational> out(top + 1);
  BigInt falling = factorial(a);  // j!/(j−l)! at j = l
  for (std::size_t j = a; j < c.size(); ++j) {
    if (j > a) falling = falling * j / (j - a);
    if (c[j] != 0) out[j - a + ad] = c[j] * falling;
  }
  return ZPoly(std::move(out));
}

/// {a†ᵏaˡ}_s = Σᵢ C(k,i)C(l,i) i! ((1−s)/2)ⁱ a†ᵏ⁻ⁱaˡ⁻ⁱ in normal order, applied to p.
inline ZPoly apply_block(const OrderedBlock& b, const ZPoly& p, const OracleConfig& cfg) {
  const Rational w = (1 - b.order.value) / 2;
  SymbolPoly normal;
  for (const auto& [m, c] : b.poly.terms()) {
    Rational wi = 1;
    for (Exponent i = 0; i <= std::min(m.ad, m.a) && wi != 0; ++i) {
      normal.add({m.ad - i, m.a - i}, c * Rational(pairing_count(m.ad, m.a, i)) * wi);
      wi *= w;
    }
  }
  const auto& in = p.coeffs();
  std::vector<Rational> out;
  for (const auto& [m, c] : normal.terms()) {
    BigInt falling = factorial(m.a);
    for (std::size_t j = m.a; j < in.size(); ++j) {
      if (j > m.a) falling = falling * j / (j - m.a);
      if (in[j] == 0) continue;
      const std::size_t k = j - m.a + m.ad;
      if (m.ad > 0 && k > cfg.cutoff)
        throw DegreeOverflow("a† raises degree beyond cutoff " + std::to_string(cfg.cutoff));
      if (out.size() <= k) out.resize(k + 1);
      out[k] += c * in[j] * falling;
    }
  }
  return ZPoly(std::move(out));
}

/// Exact action of e on p; factors act right to left.
inline ZPoly apply_expression(const OperatorExpr& e, const ZPoly& p, const OracleConfig& cfg) {
  ZPoly out;
  for (const auto& term : e.terms()) {
    ZPoly r = p;
    for (auto it = term.factors.rbegin(); it != term.factors.rend() && !r.is_zero(); ++it) {
      if (const auto* g = std::get_if<Generator>(&*it))
        r = apply_generator(*g, r, cfg);
      else
        r = apply_block(std::get<OrderedBlock>(*it), r, cfg);
    }
    out += r * term.coeff;
  }
  return out;
}

/// λ^{a†a}: zᵏ ↦ λᵏ zᵏ.
inline ZPoly apply_number_function(const Rational& lambda, const ZPoly& p) {
  std::vector<Rational> out = p.coeffs();
  Rational lk = 1;
  for (auto& c : out) {
    c *= lk;
    lk *= lambda;
  }
  return ZPoly(std::move(out));
}

/// Upper bound on the number of a† in any term: how far the expression can
/// raise the degree of a probe.
inline std::size_t creation_degree(const OperatorExpr& e) {
  std::size_t best = 0;
  for (const auto& term : e.terms()) {
    std::size_t d = 0;
    for (const auto& f : term.factors) {
      if (const auto* g = std::get_if<Generator>(&f)) {
        d += *g == Generator::AD ? 1 : 0;
      } else {
        Exponent m = 0;
        for (const auto& [mono, c] : std::get<OrderedBlock>(f).poly.terms()) m = std::max(m, mono.ad);
        d += m;
      }
    }
    best = std::max(best, d);
  }
  return best;
}

/// Largest number of generators in any term.
inline std::size_t total_degree(const OperatorExpr& e) {
  std::size_t best = 0;
  for (const auto& term : e.terms()) {
    std::size_t d = 0;
    for (const auto& f : term.factors) {
      if (std::holds_alternative<Generator>(f))
        ++d;
      else
        d += got::total_degree(std::get<OrderedBlock>(f).poly);
    }
    best = std::max(best, d);
  }
  return best;
}

struct ProbeMismatch {
  std::size_t k;
  ZPoly left;
  ZPoly right;
};

/*
 * Compares two expressions on every basis monomial zᵏ, k = 0..max_probe.
 * The cutoff is chosen so that no intermediate degree is truncated. When
 * max_probe is at least the larger total degree this decides operator
 * equality for polynomial operators.
 */
inline std::vector<ProbeMismatch> compare_on_basis(const OperatorExpr& l, const OperatorExpr& r,
                                                   std::size_t max_probe) {
  const OracleConfig cfg{max_probe + std::max(creation_degree(l), creation_degree(r))};
  std::vector<ProbeMismatch> out;
  for (std::size_t k = 0; k <= max_probe; ++k) {
    auto zl = apply_expression(l, ZPoly::basis(k), cfg);
    auto zr = apply_expression(r, ZPoly::basis(k), cfg);
    if (!(zl == zr)) out.push_back({k, std::move(zl), std::move(zr)});
  }
  return out;
}

inline std::vector<ProbeMismatch> compare_on_basis(const OperatorExpr& l, const OperatorExpr& r) {
  return compare_on_basis(l, r, std::max(total_degree(l), total_degree(r)));
}

}  // namespace got::bargmann

#endif  // GOT_BARGMANN_HPP
