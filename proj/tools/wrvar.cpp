// wrvar: command-line front end.
//
//   wrvar decide A B [--json]
//   wrvar chain A B [--s-max N] [--json]
//   wrvar class p u k1 [k2 ...] [--json]
//   wrvar bounds KIND ARGS... [--json]
//   wrvar verify --suite liebeck|lambda|identities|houghton [--budget N] [--json]
//
// Exit codes: 0 ran (and verify passed), 1 verify found a mismatch, 2 usage or input error.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wrvar/criterion.hpp"
#include "wrvar/descriptor_text.hpp"
#include "wrvar/nilpotency.hpp"
#include "wrvar/report.hpp"
#include "wrvar/verify.hpp"

namespace {

using namespace wrvar;

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t to_uint(const std::string &s, const char *what)
{
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw usage_error(std::string("invalid ") + what + ": '" + s + "'");
  return v;
}

unsigned to_small(const std::string &s, const char *what)
{
  auto v = to_uint(s, what);
  if (v > 4096)
    throw usage_error(std::string(what) + " too large: " + s);
  return static_cast<unsigned>(v);
}

void emit(bool json, const nlohmann::json &j, const std::string &text)
{
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

nlohmann::json big(const BigInt &v) { return detail::big_json(v); }

// bounds KIND ARGS...
std::pair<nlohmann::json, std::string> run_bounds(const std::string &kind,
                                                  const std::vector<std::string> &args)
{
  auto need = [&](std::size_t n, const char *usage) {
    if (args.size() != n)
      throw usage_error(std::string("usage: bounds ") + kind + " " + usage);
  };
  // Reads "d l_0 .. l_{d-1}" starting at args[at]; `tail` arguments must follow.
  auto layers = [&](std::size_t at, std::size_t tail, const char *usage) {
    if (args.size() <= at)
      throw usage_error(std::string("usage: bounds ") + kind + " " + usage);
    unsigned d = to_small(args[at], "d");
    if (args.size() != at + 1 + d + tail)
      throw usage_error(std::string("usage: bounds ") + kind + " " + usage);
    std::vector<std::uint64_t> l;
    for (std::size_t i = 0; i < d; ++i)
      l.push_back(to_uint(args[at + 1 + i], "l_i"));
    return l;
  };

  nlohmann::json j{{"kind", kind}};
  BigInt value;
  if (kind == "nu") {
    need(4, "p u k t");
    value = nu(to_uint(args[0], "p"), to_small(args[1], "u"), to_small(args[2], "k"),
               to_uint(args[3], "t"));
  } else if (kind == "t0") {
    need(3, "p k mu");
    Cardinal mu = args[2] == "inf" ? Cardinal::inf() : Cardinal(to_uint(args[2], "mu"));
    value = min_t0(to_uint(args[0], "p"), to_small(args[1], "k"), mu);
  } else if (kind == "lambda") {
    need(3, "A B t");
    value = lambda_bound(parse_descriptor(args[0]), parse_descriptor(args[1]), to_uint(args[2], "t"));
  } else if (kind == "nu-general" || kind == "lambda-general") {
    const bool is_nu = kind == "nu-general";
    auto l = layers(3, 2, is_nu ? "p u k d l_0 .. l_{d-1} r t" : "p u k d l_0 .. l_{d-1} s t");
    std::uint64_t p = to_uint(args[0], "p");
    unsigned u = to_small(args[1], "u");
    unsigned k = to_small(args[2], "k");
    auto d = static_cast<unsigned>(l.size());
    std::uint64_t rs = to_uint(args[4 + d], is_nu ? "r" : "s");
    std::uint64_t t = to_uint(args[5 + d], "t");
    value = is_nu ? nu_general(p, u, k, d, l, rs, t) : lambda_general_bound(p, u, k, d, l, rs, t);
  } else if (kind == "gap") {
    auto l = layers(2, 0, "p k d l_0 .. l_{d-1}");
    value = separation_gap(to_uint(args[0], "p"), to_small(args[1], "k"),
                           static_cast<unsigned>(l.size()), l);
  } else {
    throw usage_error("unknown bounds kind '" + kind +
                      "' (expected nu, t0, lambda, nu-general, lambda-general, gap)");
  }
  j["value"] = big(value);
  return {j, value.str() + "\n"};
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Decide when a wreath product of abelian groups generates the product variety"};
  app.require_subcommand(1);

  bool json = false;
  std::string a_text, b_text;
  std::uint64_t s_max = 3;
  std::vector<std::string> class_args;
  std::string bounds_kind;
  std::vector<std::string> bounds_args;
  std::string suite;
  std::uint64_t budget = 0;

  auto *decide = app.add_subcommand("decide", "Does A Wr B generate var(A).var(B)?");
  decide->add_option("A", a_text, "passive group descriptor")->required();
  decide->add_option("B", b_text, "active group descriptor")->required();
  decide->add_flag("--json", json, "JSON output");

  auto *chain = app.add_subcommand("chain", "Analyse the chain var(A Wr B^s), s = 1, 2, ...");
  chain->add_option("A", a_text, "passive group descriptor")->required();
  chain->add_option("B", b_text, "active group descriptor")->required();
  chain->add_option("--s-max", s_max, "largest s to certify")->check(CLI::PositiveNumber);
  chain->add_flag("--json", json, "JSON output");

  auto *cls = app.add_subcommand("class", "Nilpotency class of C_{p^u} wr (C_{p^k1} + C_{p^k2} + ...)");
  cls->add_option("args", class_args, "p u k1 [k2 ...]")->required();
  cls->add_flag("--json", json, "JSON output");

  auto *bounds = app.add_subcommand("bounds", "Evaluate a class bound: nu, t0, lambda, nu-general, lambda-general, gap");
  bounds->add_option("kind", bounds_kind, "which formula")->required();
  bounds->add_option("args", bounds_args, "formula parameters");
  bounds->add_flag("--json", json, "JSON output");

  auto *verify = app.add_subcommand("verify", "Run a formula-versus-oracle suite");
  verify->add_option("--suite", suite, "liebeck, lambda, identities or houghton")
      ->required()
      ->check(CLI::IsMember({"liebeck", "lambda", "identities", "houghton"}));
  verify->add_option("--budget", budget, "suite size bound (largest group order, or largest m,n for houghton)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (decide->parsed()) {
      auto a = parse_descriptor(a_text);
      auto b = parse_descriptor(b_text);
      auto v = generates(a, b);
      emit(json, verdict_json(a, b, v), verdict_text(a, b, v));
    } else if (chain->parsed()) {
      auto a = parse_descriptor(a_text);
      auto b = parse_descriptor(b_text);
      auto r = chain_analysis(a, b, s_max);
      auto j = chain_json(r);
      j["passive"] = render_descriptor(a);
      j["active"] = render_descriptor(b);
      emit(json, j, chain_text(r));
    } else if (cls->parsed()) {
      if (class_args.size() < 3)
        throw usage_error("usage: class p u k1 [k2 ...]");
      std::vector<unsigned> ks;
      for (std::size_t i = 2; i < class_args.size(); ++i)
        ks.push_back(to_small(class_args[i], "k"));
      auto c = liebeck_class(to_uint(class_args[0], "p"), to_small(class_args[1], "u"), ks);
      emit(json, {{"class", big(c)}}, c.str() + "\n");
    } else if (bounds->parsed()) {
      auto [j, text] = run_bounds(bounds_kind, bounds_args);
      emit(json, j, text);
    } else if (verify->parsed()) {
      auto res = run_suite(suite, budget ? budget : default_suite_budget(suite));
      std::size_t failed = 0;
      nlohmann::json rows = nlohmann::json::array();
      std::ostringstream text;
      for (const auto &row : res.rows) {
        failed += !row.match;
        rows.push_back({{"instance", row.instance}, {"formula", row.formula},
                        {"oracle", row.oracle}, {"match", row.match}});
        text << (row.match ? "ok    " : "FAIL  ") << row.instance << " | " << row.formula
             << " | " << row.oracle << "\n";
      }
      text << res.suite << ": " << res.rows.size() - failed << "/" << res.rows.size() << " passed\n";
      emit(json,
           {{"suite", res.suite}, {"rows", rows}, {"checked", res.rows.size()}, {"failed", failed},
            {"passed", failed == 0}},
           text.str());
      return failed == 0 ? 0 : 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
