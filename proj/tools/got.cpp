// got: command-line front end for the ordering engine and identity catalog.
//
//   got order --target N "a * ad"
//   got equal "a*ad" "ad*a + 1" --target N
//   got verify --identity glauber-normal --lambda 3 --max-k 8
//   got hermite --m 2 --n 1 [--tau 1/2]
//   got laguerre --n 2 [--alpha 1]
//   got list-identities
//
// Exit codes: 0 success, 1 identity failure or unequal expressions,
// 2 parse or parameter error.

#include "got/got.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

got::Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return got::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw got::identities::InvalidParameter("--" + flag + ": " + e.what());
  }
}

void print_report_text(const got::identities::VerdictReport& r) {
  std::cout << "identity: " << r.identity << " (" << to_string(r.mode) << ")\n";
  std::cout << "parameters:";
  for (const auto& [k, v] : r.parameters) std::cout << ' ' << k << '=' << v;
  std::cout << '\n';
  const bool audit = r.mode == got::identities::Mode::Audit;
  std::cout << "result: " << (r.pass() ? "PASS" : "FAIL") << (audit ? " (stated form)" : "") << '\n';
  for (const auto& d : r.diffs) std::cout << "  diff [" << d.index << "] left: " << d.left << " | right: " << d.right << '\n';
  if (!r.table_columns.empty()) {
    std::cout << "per-order coefficients:\n";
    for (const auto& row : r.table) {
      std::cout << "  " << row[0] << '\n';
      for (std::size_t i = 1; i < row.size(); ++i) std::cout << "    " << r.table_columns[i] << ": " << row[i] << '\n';
    }
  }
  for (const auto& c : r.candidates) {
    std::cout << "candidate: " << c.name << " -> " << (c.pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& d : c.diffs)
      std::cout << "  diff [" << d.index << "] left: " << d.left << " | right: " << d.right << '\n';
  }
  for (const auto& n : r.notes) std::cout << "note: " << n << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ordering of bosonic operator products"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  // order
  auto* order_cmd = app.add_subcommand("order", "Rewrite an expression into t-ordered canonical form");
  std::string order_expr;
  std::string target = "N";
  order_cmd->add_option("expr", order_expr, "Expression")->required();
  order_cmd->add_option("--target", target, "Target order: N, A, W or a rational");
  add_format(order_cmd);

  // equal
  auto* equal_cmd = app.add_subcommand("equal", "Compare two expressions in canonical form");
  std::string lhs_text, rhs_text;
  equal_cmd->add_option("lhs", lhs_text, "First expression")->required();
  equal_cmd->add_option("rhs", rhs_text, "Second expression")->required();
  equal_cmd->add_option("--target", target, "Order used for the comparison");
  add_format(equal_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity check");
  std::string identity;
  std::map<std::string, std::string> raw_params;
  verify_cmd->add_option("--identity", identity, "Identity name (see list-identities)")->required();
  const std::vector<std::pair<std::string, std::string>> verify_flags = {
      {"s", "s"},           {"t", "t"},         {"n", "n"},           {"m", "m"},
      {"lambda", "lambda"}, {"tau", "tau"},     {"kappa", "kappa"},   {"degree", "degree"},
      {"max-order", "max_order"}, {"max-k", "max_k"}, {"cutoff", "cutoff"}};
  for (const auto& [flag, key] : verify_flags) verify_cmd->add_option("--" + flag, raw_params[key], "Parameter " + key);
  add_format(verify_cmd);

  // hermite
  auto* hermite_cmd = app.add_subcommand("hermite", "Print H_{m,n}(x,y), or h_{m,n}(x,y|tau) with --tau");
  std::uint64_t herm_m = 0, herm_n = 0;
  std::string tau_text;
  hermite_cmd->add_option("--m", herm_m)->required();
  hermite_cmd->add_option("--n", herm_n)->required();
  hermite_cmd->add_option("--tau", tau_text);
  add_format(hermite_cmd);

  // laguerre
  auto* laguerre_cmd = app.add_subcommand("laguerre", "Print L_n^alpha(x)");
  std::uint64_t lag_n = 0;
  std::int64_t lag_alpha = 0;
  laguerre_cmd->add_option("--n", lag_n)->required();
  laguerre_cmd->add_option("--alpha", lag_alpha);
  add_format(laguerre_cmd);

  auto* list_cmd = app.add_subcommand("list-identities", "List registered identity checks");
  add_format(list_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (order_cmd->parsed()) {
      const auto t = got::parse_order(target);
      const auto poly = got::ordered_poly(got::parse(order_expr), t);
      if (json)
        std::cout << got::canonical_to_json(poly, t).dump(2) << '\n';
      else
        std::cout << got::format_canonical(poly, t) << '\n';
      return kExitOk;
    }

    if (equal_cmd->parsed()) {
      const auto t = got::parse_order(target);
      const auto p1 = got::ordered_poly(got::parse(lhs_text), t);
      const auto p2 = got::ordered_poly(got::parse(rhs_text), t);
      const bool equal = p1 == p2;
      std::optional<got::Monomial> first_diff;
      if (!equal) {
        const auto delta = p1 - p2;
        first_diff = delta.terms().rbegin()->first;
      }
      auto mono_text = [](const got::Monomial& m) {
        auto s = got::format_poly(got::monomial(m.ad, m.a));
        return s;
      };
      if (json) {
        got::json doc = {{"equal", equal},
                         {"lhs", got::canonical_to_json(p1, t)},
                         {"rhs", got::canonical_to_json(p2, t)}};
        if (first_diff)
          doc["first_difference"] = {{"ad", first_diff->ad},
                                     {"a", first_diff->a},
                                     {"lhs_coeff", got::to_string(p1.coeff(*first_diff))},
                                     {"rhs_coeff", got::to_string(p2.coeff(*first_diff))}};
        std::cout << doc.dump(2) << '\n';
      } else if (equal) {
        std::cout << "equal: " << got::format_canonical(p1, t) << '\n';
      } else {
        std::cout << "unequal\n  lhs: " << got::format_canonical(p1, t) << "\n  rhs: " << got::format_canonical(p2, t)
                  << "\n  first difference at " << mono_text(*first_diff) << ": " << got::to_string(p1.coeff(*first_diff))
                  << " vs " << got::to_string(p2.coeff(*first_diff)) << '\n';
      }
      return equal ? kExitOk : kExitFail;
    }

    if (verify_cmd->parsed()) {
      got::identities::Params params;
      for (const auto& [key, text] : raw_params)
        if (!text.empty()) params.set(key, rational_arg(key, text));
      const auto& check = got::identities::find_identity(identity);
      const auto report = check.procedure(params);
      if (json)
        std::cout << got::identities::report_to_json(report).dump(2) << '\n';
      else
        print_report_text(report);
      if (check.mode == got::identities::Mode::Audit) return kExitOk;
      return report.pass() ? kExitOk : kExitFail;
    }

    if (hermite_cmd->parsed()) {
      const bool incomplete = !tau_text.empty();
      const auto tau = incomplete ? rational_arg("tau", tau_text) : got::Rational(-1);
      const auto poly = got::hermite2_incomplete(herm_m, herm_n, tau);
      if (json) {
        got::json doc = {{"m", herm_m}, {"n", herm_n}, {"terms", got::bivariate_to_json(poly)}};
        if (incomplete) doc["tau"] = got::to_string(tau);
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << got::format_poly(poly) << '\n';
      }
      return kExitOk;
    }

    if (laguerre_cmd->parsed()) {
      const auto poly = got::laguerre(lag_n, lag_alpha);
      if (json)
        std::cout << got::json{{"n", lag_n}, {"alpha", lag_alpha}, {"coeffs", got::univariate_to_json(poly)}}.dump(2)
                  << '\n';
      else
        std::cout << got::format_poly(poly) << '\n';
      return kExitOk;
    }

    if (list_cmd->parsed()) {
      got::json doc = got::json::array();
      for (const auto& c : got::identities::registry()) {
        if (json)
          doc.push_back({{"name", c.name}, {"mode", to_string(c.mode)}, {"summary", c.summary}});
        else
          std::cout << c.name << "  [" << to_string(c.mode) << "]  " << c.summary << '\n';
      }
      if (json) std::cout << doc.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const got::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
