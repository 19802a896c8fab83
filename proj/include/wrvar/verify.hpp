/**
 * @file verify.hpp
 * @brief Formula-versus-oracle verification suites.
 *
 * Each suite returns one row per checked instance: what was checked, the
 * value predicted by the closed form or the criterion, the value observed by
 * brute force, and whether they agree.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wrvar/criterion.hpp"
#include "wrvar/descriptor_text.hpp"
#include "wrvar/enumerate.hpp"
#include "wrvar/nilpotency.hpp"
#include "wrvar/oracle/finite_abelian.hpp"
#include "wrvar/oracle/group.hpp"
#include "wrvar/oracle/laws.hpp"
#include "wrvar/oracle/wreath.hpp"

namespace wrvar {

struct VerifyRow {
  std::string instance;
  std::string formula;
  std::string oracle;
  bool match = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<VerifyRow> rows;

  bool passed() const
  {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow &r) { return r.match; });
  }
};

/// Sizes used when the caller does not give a budget.
inline std::uint64_t default_suite_budget(const std::string &suite)
{
  if (suite == "liebeck")
    return 4096; // largest wreath product order
  if (suite == "identities")
    return 256; // largest wreath product order
  if (suite == "lambda")
    return 64; // largest wreath product order
  return 30;   // houghton: largest m, n
}

struct LiebeckInstance {
  std::uint64_t p;
  unsigned u;
  std::vector<unsigned> ks;
  std::uint64_t order;
};

/// Every C_{p^u} wr (C_{p^{k_1}} + ...) with total order at most max_order.
inline std::vector<LiebeckInstance> liebeck_instances(std::uint64_t max_order)
{
  std::vector<LiebeckInstance> out;
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p))
      continue;
    // smallest instance for p is C_p wr C_p of order p^(p+1)
    if (BigInt(boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(p + 1))) > max_order)
      break;
    for (unsigned n = 1;; ++n) {
      BigInt b_order = boost::multiprecision::pow(BigInt(p), n);
      if (b_order > 64 || boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(b_order)) * b_order > max_order)
        break;
      for (unsigned u = 1;; ++u) {
        BigInt order = boost::multiprecision::pow(BigInt(p), u * static_cast<unsigned>(b_order)) * b_order;
        if (order > max_order)
          break;
        for (const auto &ks : partitions(n))
          out.push_back({p, u, ks, static_cast<std::uint64_t>(order)});
      }
    }
  }
  return out;
}

inline std::string ks_text(const std::vector<unsigned> &ks)
{
  std::string s = "[";
  for (std::size_t i = 0; i < ks.size(); ++i)
    s += (i ? "," : "") + std::to_string(ks[i]);
  return s + "]";
}

inline oracle::FiniteAbelianGroup cyclic_power_group(std::uint64_t p, const std::vector<unsigned> &ks)
{
  std::vector<std::uint32_t> orders;
  for (unsigned k : ks)
    orders.push_back(static_cast<std::uint32_t>(detail::checked_pow(p, k)));
  return oracle::FiniteAbelianGroup(std::move(orders));
}

/// Closed-form class against the lower central series of the concrete group.
inline SuiteResult verify_liebeck(std::uint64_t max_order = 4096)
{
  SuiteResult res{"liebeck", {}};
  for (const auto &inst : liebeck_instances(max_order)) {
    oracle::WreathProduct w(cyclic_power_group(inst.p, {inst.u}), cyclic_power_group(inst.p, inst.ks));
    auto lcs = oracle::nilpotency_class(w, w.generators());
    BigInt predicted = liebeck_class(inst.p, inst.u, inst.ks);
    res.rows.push_back({w.name() + " (order " + std::to_string(inst.order) + ")",
                        "liebeck_class(" + std::to_string(inst.p) + "," + std::to_string(inst.u) +
                            "," + ks_text(inst.ks) + ") = " + predicted.str(),
                        "class " + std::to_string(lcs.nilpotency_class),
                        predicted == lcs.nilpotency_class});
  }
  return res;
}

/// Largest class among t-generated subgroups never exceeds the bound.
inline SuiteResult verify_lambda(std::uint64_t max_order = 64, unsigned max_t = 3)
{
  SuiteResult res{"lambda", {}};
  oracle::Budget budget;
  for (const auto &inst : liebeck_instances(max_order)) {
    AbelianDescriptor a({{PrimePower{inst.p, inst.u}, 1}});
    AbelianDescriptor::SummandMap bm;
    for (unsigned k : inst.ks)
      bm[PrimePower{inst.p, k}] += 1;
    AbelianDescriptor b(bm);
    oracle::WreathProduct w(cyclic_power_group(inst.p, {inst.u}), cyclic_power_group(inst.p, inst.ks));
    for (unsigned t = 1; t <= max_t; ++t) {
      unsigned observed = oracle::max_class_t_generated(w, t, budget);
      BigInt bound = lambda_bound(a, b, t);
      res.rows.push_back({w.name() + ", t = " + std::to_string(t),
                          "lambda_bound = " + bound.str(),
                          "max class " + std::to_string(observed), BigInt(observed) <= bound});
    }
  }
  return res;
}

/// All A wr B with A, B non-trivial and |A wr B| <= max_order satisfy the
/// metabelian law and x^(mn) = 1.
inline SuiteResult verify_identities(std::uint64_t max_order = 256)
{
  SuiteResult res{"identities", {}};
  const oracle::Word metabelian = oracle::metabelian_law();
  for (std::uint64_t nb = 2; nb <= 64; ++nb) {
    for (std::uint64_t na = 2;; ++na) {
      BigInt order = boost::multiprecision::pow(BigInt(na), static_cast<unsigned>(nb)) * nb;
      if (order > max_order)
        break;
      for (const auto &ad : abelian_groups_of_order(na)) {
        for (const auto &bd : abelian_groups_of_order(nb)) {
          auto a = oracle::FiniteAbelianGroup::from_descriptor(ad);
          auto b = oracle::FiniteAbelianGroup::from_descriptor(bd);
          oracle::WreathProduct w(a, b);
          std::uint64_t mn = a.exponent() * b.exponent();
          const oracle::Word power_law = oracle::Word::var(1).pow(static_cast<std::int64_t>(mn));

          auto meta = oracle::holds_identity(w, metabelian, oracle::Exhaustive{});
          res.rows.push_back({w.name() + ": [[x1,x2],[x3,x4]]", "holds",
                              meta.holds() ? "holds" : "counterexample", meta.holds()});
          auto pw = oracle::holds_identity(w, power_law, oracle::Exhaustive{});
          res.rows.push_back({w.name() + ": x1^" + std::to_string(mn), "holds",
                              pw.holds() ? "holds" : "counterexample", pw.holds()});
        }
      }
    }
  }
  return res;
}

/// decide(C_m, C_n) against the coprimality rule.
inline SuiteResult verify_houghton(std::uint64_t max_n = 30)
{
  SuiteResult res{"houghton", {}};
  for (std::uint64_t m = 1; m <= max_n; ++m) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      auto a = AbelianDescriptor::canonicalize({{m, 1}});
      auto b = AbelianDescriptor::canonicalize({{n, 1}});
      bool coprime = std::gcd(m, n) == 1;
      bool decided = generates(a, b).generates;
      res.rows.push_back({"C" + std::to_string(m) + " Wr C" + std::to_string(n),
                          coprime ? "coprime" : "not coprime",
                          decided ? "generates" : "does not generate", coprime == decided});
    }
  }
  return res;
}

inline SuiteResult run_suite(const std::string &suite, std::uint64_t budget)
{
  if (suite == "liebeck")
    return verify_liebeck(budget);
  if (suite == "lambda")
    return verify_lambda(budget);
  if (suite == "identities")
    return verify_identities(budget);
  if (suite == "houghton")
    return verify_houghton(budget);
  throw std::invalid_argument("unknown suite: " + suite);
}

} // namespace wrvar
