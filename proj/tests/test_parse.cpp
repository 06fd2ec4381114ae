#include "catch_amalgamated.hpp"

#include "got/got.hpp"
#include "oracles.hpp"

using namespace got;

namespace {

const OrderParam N = OrderParam::normal();

std::size_t error_position(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse examples", "[parse]") {
  const auto a = OperatorExpr::generator(Generator::A), ad = OperatorExpr::generator(Generator::AD);
  CHECK(parse("a * ad") == a * ad);
  CHECK(parse("{ad^2 a}_N + 3/2") == OperatorExpr::block(monomial(2, 1), N) + OperatorExpr::scalar(Rational(3, 2)));
  CHECK(parse("{ad a}_{-1/2} * a^3") == OperatorExpr::block(monomial(1, 1), {Rational(-1, 2)}) * power(a, 3));
  CHECK(parse("{ad a}_-1") == OperatorExpr::block(monomial(1, 1), OrderParam::antinormal()));
  CHECK(parse("{ad a}_W") == OperatorExpr::block(monomial(1, 1), OrderParam::weyl()));
  CHECK(parse("{ad a}_A") == OperatorExpr::block(monomial(1, 1), OrderParam::antinormal()));
  CHECK(parse("{ad a}_1/2") == OperatorExpr::block(monomial(1, 1), {Rational(1, 2)}));
  CHECK(expr_canonical_eq(parse("(a + ad)^2"), a * a + a * ad + ad * a + ad * ad, N));
  CHECK(expr_canonical_eq(parse("2 a ad - a"), a * ad * Rational(2) - a, N));
  CHECK(parse("{(ad + a)^2}_0") == OperatorExpr::block(monomial(2, 0) + monomial(1, 1, 2) + monomial(0, 2), {0}));
}

TEST_CASE("parse errors carry a position", "[parse]") {
  CHECK(error_position("a * b") == 4);
  CHECK(error_position("a +") == 3);
  CHECK(error_position("{ad a}_Q") == 7);
  CHECK(error_position("{ {a}_N }_N") == 2);
  CHECK(error_position("(a") == 2);
  CHECK(error_position("a $ ad") == 2);
  CHECK(error_position("1/0") == 2);
  CHECK_THROWS_WITH(parse("a^99999"), Catch::Matchers::ContainsSubstring("exponent overflow"));
  CHECK_THROWS_WITH(parse("a^1025"), Catch::Matchers::ContainsSubstring("exponent overflow"));
  CHECK_NOTHROW(parse("a^1024"));
  CHECK_THROWS_WITH(parse("x"), Catch::Matchers::ContainsSubstring("position 0"));
}

TEST_CASE("parse_order names", "[parse]") {
  CHECK(parse_order("N") == OrderParam::normal());
  CHECK(parse_order("0") == OrderParam::weyl());
  CHECK(parse_order("{-1/2}") == OrderParam{Rational(-1, 2)});
  CHECK_THROWS_AS(parse_order("Z"), ParseError);
}

TEST_CASE("printed expressions parse back to themselves", "[parse][property]") {
  oracle::Random rng(101);
  for (int i = 0; i < 200; ++i) {
    OperatorExpr e;
    const auto terms = rng.uniform(1, 3);
    for (std::uint64_t k = 0; k < terms; ++k) {
      Rational c = rng.small_rational();
      if (c == 0) c = 1;
      OperatorExpr t = OperatorExpr::scalar(c);
      const auto factors = rng.uniform(0, 3);
      for (std::uint64_t f = 0; f < factors; ++f) {
        if (rng.uniform(0, 1))
          t = t * OperatorExpr::generator(rng.uniform(0, 1) ? Generator::A : Generator::AD);
        else
          t = t * OperatorExpr::block(rng.poly(3, 3), rng.grid_order());
      }
      e += t;
    }
    const auto text = format_expr(e);
    CAPTURE(text);
    CHECK(parse(text) == e);
  }
}

TEST_CASE("canonical forms print as documented", "[parse][format]") {
  CHECK(format_canonical(ordered_poly(parse("a * ad"), N), N) == "{ad a}_1 + 1");
  CHECK(format_canonical(ordered_poly(parse("{ad a}_N"), OrderParam::antinormal()), OrderParam::antinormal()) ==
        "{ad a}_-1 - 1");
  CHECK(format_canonical(ordered_poly(parse("{ad a}_0"), {0}), {0}) == "{ad a}_0");
  CHECK(format_canonical({}, N) == "0");
  CHECK(format_canonical(SymbolPoly(Rational(3)), N) == "3");
  CHECK(format_canonical(monomial(2, 1, Rational(3, 2)) - monomial(1, 0), {Rational(1, 2)}) == "{3/2 ad^2 a - ad}_{1/2}");
}

TEST_CASE("canonical JSON round trip", "[parse][json]") {
  oracle::Random rng(55);
  for (int i = 0; i < 50; ++i) {
    const auto t = rng.grid_order();
    const auto p = rng.poly(5, 4);
    const auto doc = canonical_to_json(p, t);
    const auto back = expr_from_json(json::parse(doc.dump()));
    CHECK(ordered_poly(back, t) == p);
    CHECK(back == canonical_expr(p, t));
  }
  CHECK(expr_from_json(canonical_to_json({}, N)).empty());
  CHECK_THROWS_AS(expr_from_json(json{{"terms", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(expr_from_json(json{{"order", "1/0"}, {"terms", json::array()}}), std::invalid_argument);
}

TEST_CASE("verdict reports serialise", "[json]") {
  const auto r = identities::check("aneL-audit", {{"max_order", 2}});
  const auto doc = identities::report_to_json(r);
  CHECK(doc.at("identity") == "aneL-audit");
  CHECK(doc.at("mode") == "AUDIT");
  CHECK(doc.at("pass") == false);
  CHECK(doc.at("table").at("rows").size() == 3);
  CHECK(doc.at("candidates").size() == r.candidates.size());
}
