#ifndef GOT_ENGINE_HPP
#define GOT_ENGINE_HPP

#include "got/algebra.hpp"

#include <stdexcept>
#include <string>

namespace got {

/*
 * Relative order of an (a†, a) pair when re-expressed in a target order t.
 * A pair inside one block carries the block's own s; across blocks the
 * pair is normally ordered (s = 1) when a† stands left of a and
 * anti-normally ordered (s = -1) when a stands left of a†. Each contraction
 * of such a pair contributes the scalar (t - s)/2.
 */
struct ContractionKind {
  OrderParam relative_order;

  static ContractionKind same_block(const OrderParam& s) { return {s}; }
  static ContractionKind creation_left() { return {OrderParam::normal()}; }
  static ContractionKind annihilation_left() { return {OrderParam::antinormal()}; }

  Rational value(const OrderParam& t) const { return tau_between(relative_order, t); }
};

namespace detail {

// Σᵢ pairing_count(p,q,i) wⁱ, feeding (i, weight) to emit.
template <class Emit>
void for_each_contraction(Exponent p, Exponent q, const Rational& w, Emit&& emit) {
  const Exponent top = w == 0 ? 0 : std::min(p, q);
  Rational wi = 1;
  for (Exponent i = 0; i <= top; ++i) {
    emit(i, Rational(pairing_count(p, q, i)) * wi);
    wi *= w;
  }
}

}  // namespace detail

/// Re-expresses an s-ordered block in t-order: every monomial {a†ⁿaᵐ}_s
/// becomes Σᵢ C(n,i)C(m,i) i! ((t−s)/2)ⁱ {a†ⁿ⁻ⁱaᵐ⁻ⁱ}_t.
inline OrderedBlock reorder_block(const OrderedBlock& b, const OrderParam& t) {
  const Rational tau = ContractionKind::same_block(b.order).value(t);
  if (tau == 0) return {b.poly, t};
  SymbolPoly out;
  for (const auto& [m, c] : b.poly.terms())
    detail::for_each_contraction(m.ad, m.a, tau, [&](Exponent i, const Rational& w) {
      out.add({m.ad - i, m.a - i}, c * w);
    });
  return {std::move(out), t};
}

/*
 * Product of two t-ordered blocks as a single t-ordered block.
 *
 * For monomials {a†ᵖaᑫ}_t · {a†ʳaᵘ}_t the q annihilators on the left can
 * contract with the r creators on the right (anti-normal relative order,
 * weight (t+1)/2) and the p creators on the left with the u annihilators on
 * the right (normal relative order, weight (t−1)/2). Pairs within one block
 * are already t-ordered and contribute nothing.
 */
inline OrderedBlock merge_blocks(const OrderedBlock& left, const OrderedBlock& right, const OrderParam& t) {
  if (!(left.order == t) || !(right.order == t))
    throw std::invalid_argument("merge_blocks: both blocks must already be in the target order " +
                                to_string(t.value));
  const Rational w_anti = ContractionKind::annihilation_left().value(t);
  const Rational w_norm = ContractionKind::creation_left().value(t);
  SymbolPoly out;
  for (const auto& [ml, cl] : left.poly.terms())
    for (const auto& [mr, cr] : right.poly.terms()) {
      const Rational c = cl * cr;
      detail::for_each_contraction(ml.a, mr.ad, w_anti, [&](Exponent i, const Rational& wi) {
        detail::for_each_contraction(ml.ad, mr.a, w_norm, [&](Exponent j, const Rational& wj) {
          out.add({ml.ad + mr.ad - i - j, ml.a + mr.a - i - j}, c * wi * wj);
        });
      });
    }
  return {std::move(out), t};
}

inline OrderedBlock as_block(Generator g, const OrderParam& t) {
  return {g == Generator::A ? monomial(0, 1) : monomial(1, 0), t};
}

enum class Fold { left, right };

/// t-ordered symbol of an expression: the polynomial P with e = {P}_t.
inline SymbolPoly ordered_poly(const OperatorExpr& e, const OrderParam& t, Fold fold = Fold::left) {
  SymbolPoly total;
  for (const auto& term : e.terms()) {
    std::vector<OrderedBlock> blocks;
    blocks.reserve(term.factors.size());
    for (const auto& f : term.factors) {
      if (const auto* g = std::get_if<Generator>(&f))
        blocks.push_back(as_block(*g, t));
      else
        blocks.push_back(reorder_block(std::get<OrderedBlock>(f), t));
    }
    OrderedBlock acc{SymbolPoly(Rational(1)), t};
    if (fold == Fold::left) {
      for (const auto& b : blocks) acc = merge_blocks(acc, b, t);
    } else {
      for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) acc = merge_blocks(*it, acc, t);
    }
    total += acc.poly * term.coeff;
  }
  return total;
}

/// Canonical expression for {poly}_t: a single one-block term, or empty for 0.
inline OperatorExpr canonical_expr(SymbolPoly poly, const OrderParam& t) {
  if (poly.is_zero()) return {};
  return OperatorExpr::block(std::move(poly), t);
}

/// Rewrites e into canonical t-ordered form: one term holding one t-block.
inline OperatorExpr order_expression(const OperatorExpr& e, const OrderParam& t, Fold fold = Fold::left) {
  return canonical_expr(ordered_poly(e, t, fold), t);
}

inline bool expr_canonical_eq(const OperatorExpr& e1, const OperatorExpr& e2, const OrderParam& t) {
  return ordered_poly(e1, t) == ordered_poly(e2, t);
}

namespace detail {

// P ↦ g·P + tau ∂P, with ∂ = ∂_{a†} for g = A and ∂_a for g = AD.
inline SymbolPoly shift_step(const SymbolPoly& p, Generator g, const Rational& tau) {
  if (g == Generator::A) return p * monomial(0, 1) + d_ad(p) * tau;
  return p * monomial(1, 0) + d_a(p) * tau;
}

inline OrderedBlock shift_power(const OrderedBlock& b, Generator g, std::uint64_t n, const Rational& tau) {
  OrderedBlock out = b;
  for (std::uint64_t k = 0; k < n; ++k) out.poly = shift_step(out.poly, g, tau);
  return out;
}

}  // namespace detail

/// gⁿ·b in b's own order: aⁿF = {(a + τ₊∂_{a†})ⁿF}_s and a†ⁿF = {(a† + τ₋∂_a)ⁿF}_s.
inline OrderedBlock left_multiply_power(Generator g, std::uint64_t n, const OrderedBlock& b) {
  const Rational tau = g == Generator::A ? tau_plus(b.order) : tau_minus(b.order);
  return detail::shift_power(b, g, n, tau);
}

/// b·gⁿ in b's own order: Faⁿ = {(a + τ₋∂_{a†})ⁿF}_s and Fa†ⁿ = {(a† + τ₊∂_a)ⁿF}_s.
inline OrderedBlock right_multiply_power(const OrderedBlock& b, Generator g, std::uint64_t n) {
  const Rational tau = g == Generator::A ? tau_minus(b.order) : tau_plus(b.order);
  return detail::shift_power(b, g, n, tau);
}

}  // namespace got

#endif  // GOT_ENGINE_HPP
