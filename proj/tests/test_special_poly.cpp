#include "catch_amalgamated.hpp"

#include "got/got.hpp"

using namespace got;

namespace {

const std::vector<Rational> kTaus = {-1, Rational(-1, 2), Rational(1, 2), 2};

BivariatePoly d_x(const BivariatePoly& p) {
  BivariatePoly out;
  for (const auto& [m, c] : p.terms())
    if (m.x) out.add({m.x - 1, m.y}, c * m.x);
  return out;
}

// Three-term recurrence for the generalised Laguerre polynomials, as a
// reference independent of the closed-form sum.
std::vector<std::vector<Rational>> laguerre_by_recurrence(std::uint64_t n_max, std::int64_t alpha) {
  std::vector<std::vector<Rational>> L(n_max + 1, std::vector<Rational>(n_max + 2));
  L[0][0] = 1;
  if (n_max >= 1) {
    L[1][0] = 1 + alpha;
    L[1][1] = -1;
  }
  for (std::uint64_t n = 1; n < n_max; ++n)
    for (std::uint64_t i = 0; i <= n + 1; ++i) {
      Rational v = Rational(2 * static_cast<std::int64_t>(n) + 1 + alpha) * L[n][i] -
                   Rational(static_cast<std::int64_t>(n) + alpha) * L[n - 1][i];
      if (i > 0) v -= L[n][i - 1];
      L[n + 1][i] = v / (n + 1);
    }
  return L;
}

}  // namespace

TEST_CASE("two-variable Hermite examples", "[hermite]") {
  CHECK(hermite2(1, 1) == xy_term(1, 1) - BivariatePoly(Rational(1)));
  CHECK(hermite2(2, 1) == xy_term(2, 1) - xy_term(1, 0, 2));
  for (Exponent n = 0; n <= 6; ++n) CHECK(hermite2(n, 0) == xy_term(n, 0));
  for (const auto& tau : kTaus) {
    CHECK(hermite2_incomplete(1, 1, tau) == xy_term(1, 1) + BivariatePoly(tau));
    for (Exponent n = 0; n <= 6; ++n) CHECK(hermite2_incomplete(0, n, tau) == xy_term(0, n));
  }
  for (Exponent m = 0; m <= 6; ++m)
    for (Exponent n = 0; n <= 6; ++n) CHECK(hermite2_incomplete(m, n, -1) == hermite2(m, n));
}

TEST_CASE("Hermite symmetry, derivative and scaling laws", "[hermite][property]") {
  for (const auto& tau : kTaus)
    for (Exponent m = 0; m <= 6; ++m)
      for (Exponent n = 0; n <= 6; ++n) {
        CAPTURE(to_string(tau), m, n);
        const auto h = hermite2_incomplete(m, n, tau);
        CHECK(swap_xy(hermite2_incomplete(n, m, tau)) == h);
        if (m > 0) CHECK(d_x(h) == hermite2_incomplete(m - 1, n, tau) * Rational(m));
        CHECK(rescale_even(hermite2(m, n), m + n, -tau) == h);
      }
}

TEST_CASE("rescale and shift helpers", "[hermite]") {
  CHECK(rescale(xy_term(1, 1) + BivariatePoly(Rational(3)), 2, 2) == xy_term(1, 1) + BivariatePoly(Rational(12)));
  CHECK_THROWS_AS(rescale(xy_term(1, 0), 1, 0), std::domain_error);
  CHECK(shift_xy(xy_term(2, 1), -1, 1) == xy_term(1, 2));
  CHECK_THROWS_AS(shift_xy(xy_term(0, 1), -1, 0), std::domain_error);
  CHECK_THROWS_AS(rescale_even(xy_term(1, 0), 2, 2), std::domain_error);
  CHECK(to_symbol_poly(xy_term(2, 1, 5)) == monomial(2, 1, 5));
}

TEST_CASE("Laguerre examples", "[laguerre]") {
  CHECK(laguerre(1) == UnivariatePoly({1, -1}));
  CHECK(laguerre(2) == UnivariatePoly({1, -2, Rational(1, 2)}));
  for (std::int64_t alpha = -4; alpha <= 4; ++alpha) CHECK(laguerre(0, alpha) == UnivariatePoly({1}));
  CHECK(UnivariatePoly().degree() == -1);
}

TEST_CASE("Laguerre closed form matches the three-term recurrence", "[laguerre][oracle]") {
  for (std::int64_t alpha = -6; alpha <= 6; ++alpha) {
    const auto ref = laguerre_by_recurrence(8, alpha);
    for (std::uint64_t n = 0; n <= 8; ++n) {
      CAPTURE(alpha, n);
      CHECK(laguerre(n, alpha) == UnivariatePoly(ref[n]));
    }
  }
}

TEST_CASE("incomplete Hermite generating function", "[hermite]") {
  const auto trivial = generating_check_incomplete(0, 0, 2);
  REQUIRE(trivial.coefficients.size() == 1);
  CHECK(trivial.coefficients[0].from_series == BivariatePoly(Rational(1)));
  for (const auto& tau : kTaus) {
    const auto v = generating_check_incomplete(6, 6, tau);
    CHECK(v.coefficients.size() == 49);
    CHECK(v.pass());
    for (const auto& c : v.coefficients)
      if (c.m == 1 && c.n == 1) CHECK(c.from_series == xy_term(1, 1) + BivariatePoly(tau));
  }
}

TEST_CASE("Hermite polynomials in terms of Laguerre polynomials", "[hermite][laguerre]") {
  for (const auto& tau : kTaus)
    for (Exponent m = 0; m <= 6; ++m)
      for (Exponent n = 0; n <= 6; ++n) {
        CAPTURE(to_string(tau), m, n);
        const auto h = hermite2_incomplete(m, n, tau);
        const auto lo = std::min(m, n);
        const auto alpha = static_cast<std::int64_t>(std::max(m, n)) - static_cast<std::int64_t>(lo);
        // h_{m,n} = τ^k k! x^{m-k} y^{n-k} L_k^{|m-n|}(-xy/τ), k = min(m, n).
        const auto lag = compose_xy(laguerre(lo, alpha), Rational(-1) / tau);
        const auto expected = shift_xy(lag, static_cast<std::int64_t>(m - lo), static_cast<std::int64_t>(n - lo)) *
                              (pow(tau, lo) * Rational(factorial(lo)));
        CHECK(h == expected);
      }
}
