// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status is the number of failed criteria.

#include "got/got.hpp"
#include "oracles.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef GOT_CLI_PATH
#error "GOT_CLI_PATH must name the got executable"
#endif

using namespace got;
using namespace got::identities;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + GOT_CLI_PATH + "' " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// 1. Random products of blocks, engine against the Bargmann representation.
Outcome oracle_equivalence() {
  Outcome o;
  oracle::Random rng(20240501);
  const auto start = Clock::now();
  for (int i = 0; i < 500; ++i) {
    OperatorExpr e = OperatorExpr::scalar(1);
    const auto blocks = rng.uniform(1, 4);
    for (std::uint64_t k = 0; k < blocks; ++k) e = e * OperatorExpr::block(rng.poly(3, 5), rng.grid_order());
    const auto t = rng.grid_order();
    const auto canonical = order_expression(e, t);
    const auto mism = bargmann::compare_on_basis(e, canonical);
    if (!mism.empty()) o.fail("product " + std::to_string(i) + " differs on z^" + std::to_string(mism.front().k) +
                              ": " + format_expr(e));
  }
  const double secs = seconds_since(start);
  if (secs >= 30) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "500 products, " + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

// 2. Raw words in normal order against the naive commutator rewriter.
Outcome wick_consistency() {
  Outcome o;
  oracle::Random rng(77);
  for (int i = 0; i < 200; ++i) {
    const auto w = rng.word(10);
    if (!(ordered_poly(word(w), OrderParam::normal()) == oracle::normal_order(w)))
      o.fail("word " + format_expr(word(w)));
  }
  if (o.pass) o.detail = "200 words";
  return o;
}

// 3. Round trip s -> t -> s and composition s -> u -> t on every monomial of degree <= 6.
Outcome round_trip() {
  Outcome o;
  SymbolPoly all;
  for (Exponent ad = 0; ad <= 6; ++ad)
    for (Exponent a = 0; ad + a <= 6; ++a) all.add({ad, a}, Rational(1 + ad, 1 + a));
  std::size_t pairs = 0;
  for (const auto& s : oracle::order_grid())
    for (const auto& t : oracle::order_grid()) {
      ++pairs;
      const OrderedBlock b{all, {s}};
      const auto direct = reorder_block(b, {t});
      if (!(reorder_block(direct, {s}) == b)) o.fail("round trip " + to_string(s) + " -> " + to_string(t));
      for (const auto& u : oracle::order_grid())
        if (!(reorder_block(reorder_block(b, {u}), {t}) == direct))
          o.fail("composition via " + to_string(u) + " for " + to_string(s) + " -> " + to_string(t));
    }
  if (o.pass) o.detail = std::to_string(pairs) + " (s,t) pairs";
  return o;
}

void require_pass(Outcome& o, const std::string& name, const Params& p) {
  const auto r = check(name, p);
  if (!r.pass()) {
    std::ostringstream why;
    why << name;
    for (const auto& [k, v] : r.parameters) why << ' ' << k << '=' << v;
    if (!r.diffs.empty()) why << " at " << r.diffs.front().index;
    o.fail(why.str());
  }
}

// 4. Glauber formula on the Fock basis.
Outcome glauber() {
  Outcome o;
  for (const Rational lambda : {Rational(-1, 3), Rational(1, 2), Rational(2), Rational(3)})
    require_pass(o, "glauber-normal", {{"lambda", lambda}, {"max_k", 10}});
  if (o.pass) o.detail = "lambda in {-1/3, 1/2, 2, 3}, k <= 10";
  return o;
}

// 5. Falling and rising factorials; anti-normal lambda identity.
Outcome factorials() {
  Outcome o;
  require_pass(o, "falling-factorial", {{"n", 6}, {"max_k", 12}});
  require_pass(o, "rising-factorial", {{"n", 6}, {"max_k", 12}});
  require_pass(o, "antinormal-lambda", {{"max_order", 8}, {"max_k", 10}});
  if (o.pass) o.detail = "n <= 6, k <= 12; series to order 8";
  return o;
}

// 6. Derivative lemmas.
Outcome derivative_lemmas() {
  Outcome o;
  for (const auto& s : oracle::order_grid())
    for (const char* name : {"deriv-left-a", "deriv-right-a", "deriv-left-ad", "deriv-right-ad"})
      require_pass(o, name, {{"s", s}, {"n", 4}, {"degree", 4}});
  if (o.pass) o.detail = "4 lemmas x 5 orders, n <= 4, degree <= 4";
  return o;
}

// 7. Hermite and Laguerre suite.
Outcome hermite_suite() {
  Outcome o;
  std::size_t runs = 0;
  for (Exponent n = 0; n <= 6; ++n)
    for (Exponent m = 0; m <= 6; ++m)
      for (const auto& s : oracle::order_grid()) {
        require_pass(o, "fan-hermite-normal", {{"s", s}, {"n", n}, {"m", m}});
        ++runs;
        for (const auto& t : oracle::order_grid()) {
          require_pass(o, "fan-hermite-general", {{"s", s}, {"t", t}, {"n", n}, {"m", m}});
          ++runs;
        }
      }
  for (const Rational k : {Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(2)}) {
    require_pass(o, "incomplete-hermite-gf", {{"m", 6}, {"n", 6}, {"tau", k}});
    require_pass(o, "h-H-special-case", {{"m", 6}, {"n", 6}, {"kappa", k}});
    require_pass(o, "hermite-laguerre", {{"m", 6}, {"n", 6}, {"kappa", k}});
    require_pass(o, "h-nn-laguerre", {{"n", 6}, {"kappa", k}});
    runs += 4;
  }
  if (o.pass) o.detail = std::to_string(runs) + " checks, m,n <= 6";
  return o;
}

// 8. Exponential of the number operator, s -> t, as a formal series.
Outcome exp_number() {
  Outcome o;
  std::size_t pairs = 0, poles = 0;
  const std::vector<Rational> lambdas = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1),
                                         Rational(2), Rational(4)};
  for (const auto& s : oracle::order_grid())
    for (const auto& t : oracle::order_grid()) {
      if (s == t) continue;
      ++pairs;
      require_pass(o, "exp-number-reorder", {{"s", s}, {"t", t}, {"max_order", 8}});
      const Rational tau_st = (t - s) / 2;
      for (const auto& lambda : lambdas) {
        const Params p{{"s", s}, {"t", t}, {"max_order", 8}, {"lambda", lambda}};
        if (lambda * tau_st == 1) {
          ++poles;
          try {
            check("exp-number-reorder", p);
            o.fail("no pole error at s=" + to_string(s) + " t=" + to_string(t) + " lambda=" + to_string(lambda));
          } catch (const PoleError&) {
          }
        } else {
          require_pass(o, "exp-number-reorder", p);
        }
      }
    }
  if (o.pass) o.detail = std::to_string(pairs) + " (s,t) pairs to order 8, " + std::to_string(poles) + " poles refused";
  return o;
}

// 9. Audit reports through the command-line tool.
Outcome audits() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t runs = 0;
  auto inspect = [&](const std::string& args, std::size_t expected_rows) {
    ++runs;
    const auto r = run_cli("verify " + args + " --format json");
    if (r.status != 0) return o.fail("exit " + std::to_string(r.status) + " for " + args);
    json doc;
    try {
      doc = json::parse(r.out);
    } catch (const json::exception&) {
      return o.fail("unparsable report for " + args);
    }
    const auto& columns = doc.at("table").at("columns");
    const auto& rows = doc.at("table").at("rows");
    if (rows.size() != expected_rows) return o.fail("incomplete table for " + args);
    std::size_t direct = columns.size(), derived = columns.size();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c] == "direct") direct = c;
      if (columns[c] == "engine-derived") derived = c;
    }
    if (direct == columns.size() || derived == columns.size()) return o.fail("missing columns for " + args);
    for (const auto& row : rows) {
      if (row.size() != columns.size()) return o.fail("ragged row for " + args);
      if (row[direct] != row[derived]) return o.fail("engine form differs at " + row[0].get<std::string>());
    }
    bool engine_ok = false;
    for (const auto& c : doc.at("candidates"))
      if (c.at("name").get<std::string>().starts_with("engine-derived")) engine_ok = c.at("pass").get<bool>();
    if (!engine_ok) o.fail("engine-derived candidate fails for " + args);
  };
  const std::string st = "--s 0 --t 1";
  for (int n = 0; n <= 2; ++n) {
    inspect("--identity aneL-audit " + st + " --n " + std::to_string(n) + " --max-order 6", 7);
    for (int m = 0; m <= 2; ++m)
      inspect("--identity general-product-rule-audit " + st + " --n " + std::to_string(n) + " --m " +
                  std::to_string(m) + " --max-order 6",
              7 + n);
  }
  const double secs = seconds_since(start);
  if (secs >= 10) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(runs) + " reports, " + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

// 10. Documented command-line examples.
Outcome cli_contract() {
  Outcome o;
  auto expect = [&](const std::string& args, int status, const std::string& line) {
    const auto r = run_cli(args);
    if (r.status != status) return o.fail(args + ": exit " + std::to_string(r.status));
    if (!line.empty() && first_line(r.out) != line) o.fail(args + ": printed '" + first_line(r.out) + "'");
  };
  expect("order --target N 'a * ad'", 0, "{ad a}_1 + 1");
  expect("order --target A '{ad a}_N'", 0, "{ad a}_-1 - 1");
  expect("order --target 0 '{ad a}_0'", 0, "{ad a}_0");
  expect("verify --identity glauber-normal --lambda 3 --max-k 8", 0, "");
  expect("verify --identity fan-hermite-general --s 1 --t -1 --n 3 --m 2", 0, "");
  expect("equal 'a*ad' 'ad*a + 1' --target 1", 0, "equal: {ad a}_1 + 1");
  expect("equal a ad --target 1", 1, "unequal");
  expect("equal a ad --target W", 1, "unequal");
  expect("equal '{ad a}_0' '{ad a}_1 + 1/2' --target 1", 0, "");
  expect("order 'a * b'", 2, "");
  expect("verify --identity no-such-thing", 2, "");

  const auto pass_line = run_cli("verify --identity glauber-normal --lambda 3 --max-k 8");
  if (pass_line.out.find("result: PASS") == std::string::npos) o.fail("glauber report lacks PASS");
  const auto anel = run_cli("verify --identity aneL-audit --s 0 --t 1 --n 1 --max-order 6 --format json");
  if (anel.status != 0) o.fail("aneL-audit json: exit " + std::to_string(anel.status));
  try {
    const auto doc = json::parse(anel.out);
    if (doc.at("identity") != "aneL-audit" || doc.at("mode") != "AUDIT") o.fail("aneL-audit json: wrong header");
  } catch (const json::exception&) {
    o.fail("aneL-audit json: unparsable");
  }
  const auto diff = run_cli("equal a ad --target 1");
  if (diff.out.find("first difference at ad") == std::string::npos) o.fail("equal a ad: no monomial diff");
  if (o.pass) o.detail = "order, verify and equal examples";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence of random block products", oracle_equivalence},
      {"normal order of raw words matches the commutator rewriter", wick_consistency},
      {"reordering round trip and composition", round_trip},
      {"Glauber formula", glauber},
      {"falling, rising and anti-normal lambda identities", factorials},
      {"derivative lemmas", derivative_lemmas},
      {"Hermite and Laguerre suite", hermite_suite},
      {"number-operator exponential reordering", exp_number},
      {"audit reports", audits},
      {"command-line contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ' ' << criteria[i].first << " (" << o.detail << ")"
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed" << std::endl;
  return failed;
}
