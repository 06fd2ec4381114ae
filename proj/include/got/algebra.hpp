#ifndef GOT_ALGEBRA_HPP
#define GOT_ALGEBRA_HPP

#include "got/polynomial.hpp"
#include "got/rational.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace got {

/// The s of an ordering symbol {·}_s. Any exact rational is accepted; 1, 0
/// and -1 are normal, Weyl and anti-normal order.
struct OrderParam {
  Rational value;

  static OrderParam normal() { return {Rational(1)}; }
  static OrderParam weyl() { return {Rational(0)}; }
  static OrderParam antinormal() { return {Rational(-1)}; }

  friend bool operator==(const OrderParam&, const OrderParam&) = default;
};

// Contraction weights derived from an ordering parameter.
inline Rational tau_plus(const OrderParam& s) { return (s.value + 1) / 2; }
inline Rational tau_minus(const OrderParam& s) { return (s.value - 1) / 2; }
/// (t - s)/2: weight of one contraction when moving from s- to t-order.
inline Rational tau_between(const OrderParam& s, const OrderParam& t) { return (t.value - s.value) / 2; }

/// A commutative polynomial wrapped in an ordering symbol, {poly}_order.
struct OrderedBlock {
  SymbolPoly poly;
  OrderParam order;

  friend bool operator==(const OrderedBlock&, const OrderedBlock&) = default;
};

enum class Generator { A, AD };

using Factor = std::variant<OrderedBlock, Generator>;

/// coeff · factor₀ · factor₁ ⋯ (noncommutative, left to right).
struct Term {
  Rational coeff = 1;
  std::vector<Factor> factors;

  friend bool operator==(const Term&, const Term&) = default;
};

/*
 * Sum of weighted noncommutative products. The empty sum is zero and a term
 * with no factors is a scalar. Nothing is simplified on construction; use
 * order_expression (engine.hpp) to reach the canonical t-ordered form.
 */
class OperatorExpr {
 public:
  OperatorExpr() = default;
  explicit OperatorExpr(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static OperatorExpr scalar(const Rational& c) {
    if (c == 0) return {};
    return OperatorExpr({Term{c, {}}});
  }
  static OperatorExpr generator(Generator g) { return OperatorExpr({Term{1, {g}}}); }
  static OperatorExpr block(OrderedBlock b) { return OperatorExpr({Term{1, {std::move(b)}}}); }
  static OperatorExpr block(SymbolPoly p, OrderParam s) { return block(OrderedBlock{std::move(p), std::move(s)}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  OperatorExpr& operator+=(const OperatorExpr& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  OperatorExpr& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff *= s;
    return *this;
  }

  friend OperatorExpr operator+(OperatorExpr l, const OperatorExpr& r) { return l += r; }
  friend OperatorExpr operator-(OperatorExpr e) { return e *= Rational(-1); }
  friend OperatorExpr operator-(OperatorExpr l, const OperatorExpr& r) { return l += -r; }
  friend OperatorExpr operator*(OperatorExpr e, const Rational& s) { return e *= s; }
  friend OperatorExpr operator*(const Rational& s, OperatorExpr e) { return e *= s; }

  /// Noncommutative product, distributed over both sums.
  friend OperatorExpr operator*(const OperatorExpr& l, const OperatorExpr& r) {
    std::vector<Term> out;
    out.reserve(l.terms_.size() * r.terms_.size());
    for (const auto& tl : l.terms_)
      for (const auto& tr : r.terms_) {
        Term t{tl.coeff * tr.coeff, tl.factors};
        t.factors.insert(t.factors.end(), tr.factors.begin(), tr.factors.end());
        out.push_back(std::move(t));
      }
    return OperatorExpr(std::move(out));
  }

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

 private:
  std::vector<Term> terms_;
};

inline OperatorExpr power(const OperatorExpr& e, std::uint64_t n) {
  OperatorExpr r = OperatorExpr::scalar(1);
  for (std::uint64_t i = 0; i < n; ++i) r = r * e;
  return r;
}

/// Word of raw generators, e.g. {A, AD, A} for a·a†·a.
inline OperatorExpr word(const std::vector<Generator>& gens) {
  Term t;
  t.factors.assign(gens.begin(), gens.end());
  return OperatorExpr({std::move(t)});
}

}  // namespace got

#endif  // GOT_ALGEBRA_HPP
