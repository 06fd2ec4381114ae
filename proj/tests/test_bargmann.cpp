#include "catch_amalgamated.hpp"

#include "got/got.hpp"
#include "oracles.hpp"

using namespace got;
using namespace got::bargmann;

namespace {

const OracleConfig cfg{32};

ZPoly z(std::size_t k, const Rational& c = 1) { return ZPoly::basis(k, c); }

}  // namespace

TEST_CASE("generators act as derivative and multiplication", "[bargmann]") {
  CHECK(apply_generator(Generator::A, z(3), cfg) == z(2, 3));
  CHECK(apply_generator(Generator::AD, z(3), cfg) == z(4));
  CHECK(apply_generator(Generator::A, z(0), cfg).is_zero());
  oracle::Random rng(2);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> c(rng.uniform(1, 8));
    for (auto& x : c) x = rng.small_rational();
    const ZPoly p(c);
    const auto a_ad = apply_generator(Generator::A, apply_generator(Generator::AD, p, cfg), cfg);
    const auto ad_a = apply_generator(Generator::AD, apply_generator(Generator::A, p, cfg), cfg);
    CHECK(a_ad + ad_a * Rational(-1) == p);
  }
}

TEST_CASE("apply_expression examples", "[bargmann]") {
  const auto N = OrderParam::normal(), A = OrderParam::antinormal();
  CHECK(apply_expression(OperatorExpr::block(monomial(1, 1), N), z(2), cfg) == z(2, 2));
  CHECK(apply_expression(OperatorExpr::block(monomial(2, 2), N), z(3), cfg) == z(3, 6));
  for (Exponent n = 0; n <= 5; ++n)
    for (std::size_t k = 0; k <= 8; ++k) {
      const Rational rising(factorial(k + n), factorial(k));
      CHECK(apply_expression(OperatorExpr::block(monomial(n, n), A), z(k), cfg) == z(k, rising));
    }
  CHECK(apply_expression(OperatorExpr{}, z(3), cfg).is_zero());
  CHECK(apply_expression(OperatorExpr::scalar(5), z(3), cfg) == z(3, 5));
}

TEST_CASE("apply_number_function examples", "[bargmann]") {
  const ZPoly p({1, 2, 3});
  CHECK(apply_number_function(1, p) == p);
  CHECK(apply_number_function(3, z(2)) == z(2, 9));
  CHECK(apply_number_function(Rational(1, 2), z(0)) == z(0));
}

TEST_CASE("apply_expression is linear", "[bargmann][property]") {
  oracle::Random rng(14);
  for (int i = 0; i < 30; ++i) {
    const auto e1 = OperatorExpr::block(rng.poly(3, 3), rng.grid_order()) * OperatorExpr::generator(Generator::A);
    const auto e2 = OperatorExpr::generator(Generator::AD) * OperatorExpr::block(rng.poly(3, 3), rng.grid_order());
    const auto c = rng.small_rational();
    for (std::size_t k = 0; k <= 6; ++k) {
      const auto lhs = apply_expression(e1 + e2 * c, z(k), cfg);
      const auto rhs = apply_expression(e1, z(k), cfg) + apply_expression(e2, z(k), cfg) * c;
      CHECK(lhs == rhs);
      const auto p = z(k) + z(k + 1, c);
      CHECK(apply_expression(e1, p, cfg) == apply_expression(e1, z(k), cfg) + apply_expression(e1, z(k + 1), cfg) * c);
    }
  }
}

TEST_CASE("cutoff overflow is reported", "[bargmann]") {
  CHECK_THROWS_AS(apply_generator(Generator::AD, z(4), OracleConfig{4}), DegreeOverflow);
  CHECK_NOTHROW(apply_generator(Generator::AD, z(3), OracleConfig{4}));
  CHECK_THROWS_AS(apply_expression(word({Generator::AD, Generator::AD}), z(3), OracleConfig{4}), DegreeOverflow);
}

TEST_CASE("compare_on_basis detects equal and unequal operators", "[bargmann]") {
  const auto a = OperatorExpr::generator(Generator::A), ad = OperatorExpr::generator(Generator::AD);
  CHECK(compare_on_basis(a * ad, ad * a + OperatorExpr::scalar(1)).empty());
  const auto mism = compare_on_basis(a * ad, ad * a);
  REQUIRE_FALSE(mism.empty());
  CHECK(mism.front().k == 0);
  CHECK(compare_on_basis(OperatorExpr::block(monomial(1, 1), OrderParam::weyl()),
                         ad * a + OperatorExpr::scalar(Rational(1, 2)))
            .empty());
  CHECK(creation_degree(ad * OperatorExpr::block(monomial(3, 1), OrderParam::weyl())) == 4);
  CHECK(total_degree(ad * OperatorExpr::block(monomial(3, 1), OrderParam::weyl())) == 5);
}
