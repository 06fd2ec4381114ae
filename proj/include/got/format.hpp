#ifndef GOT_FORMAT_HPP
#define GOT_FORMAT_HPP

#include "got/algebra.hpp"
#include "got/bargmann.hpp"
#include "got/special_poly.hpp"

#include <sstream>
#include <string>
#include <string_view>

namespace got {

namespace detail {

inline void append_power(std::string& out, std::string_view name, Exponent e) {
  if (e == 0) return;
  if (!out.empty() && out.back() != ' ') out += ' ';
  out += name;
  if (e > 1) out += "^" + std::to_string(e);
}

// Writes "c body" pieces joined with " + " / " - ", highest term first.
template <class Poly, class MonoFn>
std::string format_sum(const Poly& p, MonoFn&& mono_text) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const std::string body = mono_text(m);
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (body.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += body;
    else
      out += to_string(mag) + " " + body;
  }
  return out;
}

}  // namespace detail

/// "3/2 ad^2 a - ad + 1", highest monomial first.
inline std::string format_poly(const SymbolPoly& p) {
  return detail::format_sum(p, [](const Monomial& m) {
    std::string s;
    detail::append_power(s, "ad", m.ad);
    detail::append_power(s, "a", m.a);
    return s;
  });
}

inline std::string format_poly(const BivariatePoly& p) {
  return detail::format_sum(p, [](const XYMonomial& m) {
    std::string s;
    detail::append_power(s, "x", m.x);
    detail::append_power(s, "y", m.y);
    return s;
  });
}

inline std::string format_poly(const UnivariatePoly& p) {
  if (p.is_zero()) return "0";
  SparsePoly2<Monomial> tmp;  // reuse the sparse printer, x stored in the a slot
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) tmp.add({0, i}, p.coeffs()[i]);
  return detail::format_sum(tmp, [](const Monomial& m) {
    std::string s;
    detail::append_power(s, "x", m.a);
    return s;
  });
}

/// Integers print bare ("1", "-1"), fractions braced ("{1/2}").
inline std::string format_order(const OrderParam& s) {
  if (is_integer(s.value)) return to_string(s.value);
  return "{" + to_string(s.value) + "}";
}

inline std::string format_block(const OrderedBlock& b) {
  return "{" + format_poly(b.poly) + "}_" + format_order(b.order);
}

/// Canonical t-ordered form: non-constant part in one bracket, constant
/// outside it, e.g. "{ad a}_1 + 1".
inline std::string format_canonical(const SymbolPoly& p, const OrderParam& t) {
  if (p.is_zero()) return "0";
  const Rational c = p.constant();
  SymbolPoly rest = p;
  rest.add({}, -c);
  if (rest.is_zero()) return to_string(c);
  std::string out = format_block({rest, t});
  if (c > 0) out += " + " + to_string(c);
  if (c < 0) out += " - " + to_string(Rational(-c));
  return out;
}

/// General expression printer; output is accepted by parse().
inline std::string format_expr(const OperatorExpr& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : e.terms()) {
    const bool neg = term.coeff < 0;
    const Rational mag = neg ? Rational(-term.coeff) : term.coeff;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string body;
    for (const auto& f : term.factors) {
      if (!body.empty()) body += " * ";
      if (const auto* g = std::get_if<Generator>(&f))
        body += *g == Generator::A ? "a" : "ad";
      else
        body += format_block(std::get<OrderedBlock>(f));
    }
    if (body.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += body;
    else
      out += to_string(mag) + " * " + body;
  }
  return out;
}

inline std::string format_zpoly(const bargmann::ZPoly& p) {
  if (p.is_zero()) return "0";
  SparsePoly2<Monomial> tmp;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) tmp.add({0, i}, p.coeffs()[i]);
  return detail::format_sum(tmp, [](const Monomial& m) {
    std::string s;
    detail::append_power(s, "z", m.a);
    return s;
  });
}

}  // namespace got

#endif  // GOT_FORMAT_HPP
