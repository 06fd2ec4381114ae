#ifndef GOT_PARSE_HPP
#define GOT_PARSE_HPP

/*
 * Expression grammar (whitespace-insensitive):
 *
 *   expr    := ['+'|'-'] term (('+'|'-') term)*
 *   term    := unary (['*'] unary)*          juxtaposition multiplies
 *   unary   := ('+'|'-') unary | power
 *   power   := primary ('^' nat)*
 *   primary := rational | 'a' | 'ad' | '{' poly '}' '_' order | '(' expr ')'
 *   order   := ['-'] rational | 'N' | 'A' | 'W' | '{' ['-'] rational '}'
 *   rational:= nat ['/' nat]
 *
 * Inside an ordering symbol 'poly' follows the same grammar without nested
 * symbols and its product is commutative.
 */

#include "got/algebra.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace got {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Named or numeric ordering parameter: N, A, W or a rational such as -1/2.
inline OrderParam parse_order(std::string_view text) {
  if (text == "N") return OrderParam::normal();
  if (text == "A") return OrderParam::antinormal();
  if (text == "W") return OrderParam::weyl();
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  try {
    return {parse_rational(text)};
  } catch (const std::invalid_argument&) {
    throw ParseError(0, "unknown order name '" + std::string(text) + "'");
  }
}

namespace detail {

inline constexpr Exponent max_exponent = 1024;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  OperatorExpr parse_all() {
    auto e = sum<OperatorExpr>();
    if (kind_ != Kind::end) fail("unexpected '" + text_ + "'");
    return e;
  }

 private:
  enum class Kind { number, ident, symbol, end };

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(start_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const { throw ParseError(pos, what); }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    start_ = pos_;
    if (pos_ >= src_.size()) {
      kind_ = Kind::end;
      text_ = "end of input";
      return;
    }
    const char c = src_[pos_];
    auto take_while = [&](auto pred) {
      while (pos_ < src_.size() && pred(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      text_ = std::string(src_.substr(start_, pos_ - start_));
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      kind_ = Kind::number;
      take_while([](unsigned char ch) { return std::isdigit(ch) != 0; });
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      kind_ = Kind::ident;
      take_while([](unsigned char ch) { return std::isalpha(ch) != 0; });
    } else if (std::string_view("+-*^/(){}_").find(c) != std::string_view::npos) {
      kind_ = Kind::symbol;
      text_ = std::string(1, c);
      ++pos_;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  bool at(char c) const { return kind_ == Kind::symbol && text_[0] == c; }
  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "' but found '" + text_ + "'");
    advance();
  }
  bool starts_primary() const {
    return kind_ == Kind::number || kind_ == Kind::ident || at('(') || at('{');
  }

  Rational rational() {
    if (kind_ != Kind::number) fail("expected a number but found '" + text_ + "'");
    BigInt num(text_);
    advance();
    if (!at('/')) return Rational(num);
    advance();
    if (kind_ != Kind::number) fail("expected a denominator but found '" + text_ + "'");
    BigInt den(text_);
    if (den == 0) fail("zero denominator");
    advance();
    return Rational(num, den);
  }

  Exponent exponent() {
    if (kind_ != Kind::number) fail("expected an exponent but found '" + text_ + "'");
    if (text_.size() > 6 || std::stoull(text_) > max_exponent)
      fail("exponent overflow (limit " + std::to_string(max_exponent) + ")");
    const Exponent e = std::stoull(text_);
    advance();
    return e;
  }

  OrderParam order() {
    if (kind_ == Kind::ident) {
      const std::string name = text_;
      if (name != "N" && name != "A" && name != "W") fail("unknown order name '" + name + "'");
      advance();
      return parse_order(name);
    }
    const bool braced = at('{');
    if (braced) advance();
    bool neg = false;
    if (at('-') || at('+')) {
      neg = at('-');
      advance();
    }
    Rational r = rational();
    if (braced) expect('}');
    return {neg ? Rational(-r) : r};
  }

  template <class V>
  static V lift(const Rational& c) {
    if constexpr (std::is_same_v<V, OperatorExpr>)
      return OperatorExpr::scalar(c);
    else
      return SymbolPoly(c);
  }

  template <class V>
  static V raise(const V& v, Exponent n) {
    if constexpr (std::is_same_v<V, OperatorExpr>)
      return power(v, n);
    else
      return got::pow(v, n);
  }

  template <class V>
  V sum() {
    V acc = term<V>();
    while (at('+') || at('-')) {
      const bool minus = at('-');
      advance();
      V rhs = term<V>();
      if (minus)
        acc = acc - rhs;
      else
        acc = acc + rhs;
    }
    return acc;
  }

  template <class V>
  V term() {
    V acc = unary<V>();
    for (;;) {
      if (at('*')) {
        advance();
        acc = acc * unary<V>();
      } else if (starts_primary()) {
        acc = acc * power_of<V>();
      } else {
        return acc;
      }
    }
  }

  template <class V>
  V unary() {
    if (at('-')) {
      advance();
      return -unary<V>();
    }
    if (at('+')) {
      advance();
      return unary<V>();
    }
    return power_of<V>();
  }

  template <class V>
  V power_of() {
    V base = primary<V>();
    while (at('^')) {
      advance();
      base = raise(base, exponent());
    }
    return base;
  }

  template <class V>
  V primary() {
    if (kind_ == Kind::number) return lift<V>(rational());
    if (kind_ == Kind::ident) {
      const std::string name = text_;
      const std::size_t at_name = start_;
      advance();
      if (name == "a" || name == "ad") {
        if constexpr (std::is_same_v<V, OperatorExpr>)
          return OperatorExpr::generator(name == "a" ? Generator::A : Generator::AD);
        else
          return name == "a" ? monomial(0, 1) : monomial(1, 0);
      }
      fail_at(at_name, "unknown symbol '" + name + "'");
    }
    if (at('(')) {
      advance();
      V inner = sum<V>();
      expect(')');
      return inner;
    }
    if (at('{')) {
      if constexpr (std::is_same_v<V, OperatorExpr>) {
        advance();
        SymbolPoly poly = sum<SymbolPoly>();
        expect('}');
        expect('_');
        OrderParam s = order();
        if (poly.is_zero()) return OperatorExpr{};
        return OperatorExpr::block(std::move(poly), std::move(s));
      } else {
        fail("ordering symbols cannot be nested");
      }
    }
    fail("unexpected '" + text_ + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  Kind kind_ = Kind::end;
  std::string text_;
};

}  // namespace detail

inline OperatorExpr parse(std::string_view input) { return detail::Parser(input).parse_all(); }

}  // namespace got

#endif  // GOT_PARSE_HPP
