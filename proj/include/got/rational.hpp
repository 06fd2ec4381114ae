#ifndef GOT_RATIONAL_HPP
#define GOT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace got {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  auto num = numerator(r).str();
  auto den = denominator(r);
  if (den == 1) return num;
  return num + "/" + den.str();
}

/// Parses an optionally signed integer or fraction: "3", "-1/2", "+4/6".
/// Throws std::invalid_argument on malformed input or zero denominator.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  auto num_text = body.substr(0, slash);
  auto den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num_text) || !digits(den_text))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt num{std::string(num_text)};
  BigInt den{std::string(den_text)};
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

inline Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Generalised binomial coefficient n(n-1)...(n-k+1)/k!, defined for every
/// integer n (including negative n) and k >= 0.
inline BigInt binomial(const BigInt& n, std::uint64_t k) {
  BigInt num = 1;
  for (std::uint64_t i = 0; i < k; ++i) num *= (n - i);
  return num / factorial(k);
}

/// C(p,i) C(q,i) i!: the number of ways to pick i disjoint pairs between a
/// group of p and a group of q operators.
inline BigInt pairing_count(std::uint64_t p, std::uint64_t q, std::uint64_t i) {
  if (i > p || i > q) return 0;
  BigInt num = 1;
  for (std::uint64_t k = 0; k < i; ++k) num *= BigInt(p - k) * (q - k);
  return num / factorial(i);
}

}  // namespace got

#endif  // GOT_RATIONAL_HPP
