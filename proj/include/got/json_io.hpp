#ifndef GOT_JSON_IO_HPP
#define GOT_JSON_IO_HPP

// JSON forms used by the command-line tool. Rationals travel as "p/q"
// strings so nothing is rounded.
//
// Expression:
//   {"order":"p/q","terms":[{"coeff":"p/q","monomials":[{"ad":k,"a":l,"coeff":"p/q"}]}]}
// meaning Σ coeff·{Σ monomials}_order.

#include "got/algebra.hpp"
#include "got/identities.hpp"
#include "got/special_poly.hpp"

#include "json.hpp"

#include <stdexcept>

namespace got {

using nlohmann::json;

inline json poly_to_json(const SymbolPoly& p) {
  json monos = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    monos.push_back({{"ad", it->first.ad}, {"a", it->first.a}, {"coeff", to_string(it->second)}});
  return monos;
}

/// Canonical {poly}_t as a single-term expression document (zero has no terms).
inline json canonical_to_json(const SymbolPoly& p, const OrderParam& t) {
  json terms = json::array();
  if (!p.is_zero()) terms.push_back({{"coeff", "1"}, {"monomials", poly_to_json(p)}});
  return {{"order", to_string(t.value)}, {"terms", terms}};
}

inline OperatorExpr expr_from_json(const json& doc) {
  try {
    const OrderParam order{parse_rational(doc.at("order").get<std::string>())};
    OperatorExpr out;
    for (const auto& term : doc.at("terms")) {
      SymbolPoly poly;
      for (const auto& m : term.at("monomials"))
        poly.add({m.at("ad").get<Exponent>(), m.at("a").get<Exponent>()},
                 parse_rational(m.at("coeff").get<std::string>()));
      if (!poly.is_zero()) out += OperatorExpr::block(std::move(poly), order) * parse_rational(term.at("coeff").get<std::string>());
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed expression document: ") + e.what());
  }
}

inline json bivariate_to_json(const BivariatePoly& p) {
  json out = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back({{"x", it->first.x}, {"y", it->first.y}, {"coeff", to_string(it->second)}});
  return out;
}

inline json univariate_to_json(const UnivariatePoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

namespace identities {

inline json diffs_to_json(const std::vector<CoefficientDiff>& diffs) {
  json out = json::array();
  for (const auto& d : diffs) out.push_back({{"index", d.index}, {"left", d.left}, {"right", d.right}});
  return out;
}

/*
 * {"identity", "mode", "parameters": {name: "p/q"}, "pass", "diffs": [...],
 *  "candidates": [{"name", "pass", "diffs"}], "table": {"columns", "rows"},
 *  "notes": [...]}
 */
inline json report_to_json(const VerdictReport& r) {
  json candidates = json::array();
  for (const auto& c : r.candidates)
    candidates.push_back({{"name", c.name}, {"pass", c.pass()}, {"diffs", diffs_to_json(c.diffs)}});
  json doc = {{"identity", r.identity},
              {"mode", to_string(r.mode)},
              {"parameters", r.parameters},
              {"pass", r.pass()},
              {"diffs", diffs_to_json(r.diffs)},
              {"candidates", candidates},
              {"notes", r.notes}};
  if (!r.table_columns.empty()) doc["table"] = {{"columns", r.table_columns}, {"rows", r.table}};
  return doc;
}

}  // namespace identities

}  // namespace got

#endif  // GOT_JSON_IO_HPP
