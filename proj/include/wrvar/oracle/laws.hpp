/**
 * @file laws.hpp
 * @brief Checking laws and discriminating word sets in a finite group.
 *
 * Exhaustive law checking works on value sets: a subword's set of values over
 * all assignments of its variables. When the operands of a product or
 * commutator use disjoint variables, the value set of the whole is obtained
 * by combining the operand value sets pairwise, which is exactly equivalent
 * to enumerating all assignments but much cheaper (for the metabelian law in
 * a group of order n: n^2 commutators instead of n^4 assignments).
 */
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>
#include <variant>
#include <vector>

#include "wrvar/oracle/group.hpp"
#include "wrvar/oracle/word.hpp"

namespace wrvar::oracle {

struct Exhaustive {
  std::uint64_t budget = Budget{}.tuples;
};

struct Sampled {
  std::uint64_t count = 1000;
  std::uint64_t seed = 0x5eed;
};

using CheckMode = std::variant<Exhaustive, Sampled>;

template <FiniteGroup G>
struct IdentityCheck {
  std::optional<Assignment<G>> counterexample;
  std::uint64_t evaluations = 0; ///< group evaluations performed

  bool holds() const { return !counterexample.has_value(); }
};

namespace detail {

template <FiniteGroup G>
using ValueSet = std::unordered_map<Element<G>, Assignment<G>, typename G::element_hash>;

template <FiniteGroup G>
class ValueSetEvaluator {
public:
  ValueSetEvaluator(const G &g, const std::vector<Element<G>> &elems, std::uint64_t budget)
      : g_(g), elems_(elems), budget_(budget)
  {}

  std::uint64_t evaluations() const { return evaluations_; }

  ValueSet<G> values(const Word &w)
  {
    return std::visit([&](const auto &n) { return values_of(w, n); }, w.node());
  }

private:
  void charge(const BigInt &n, const char *what)
  {
    if (BigInt(evaluations_) + n > budget_)
      throw budget_exceeded(what, BigInt(evaluations_) + n, budget_);
    evaluations_ += static_cast<std::uint64_t>(n);
  }

  static bool disjoint(const std::vector<Word> &parts)
  {
    std::set<int> seen;
    for (const auto &p : parts)
      for (int v : p.variables())
        if (!seen.insert(v).second)
          return false;
    return true;
  }

  ValueSet<G> values_of(const Word &, const Letter &n)
  {
    charge(elems_.size(), "law evaluation");
    ValueSet<G> out;
    for (const auto &x : elems_)
      out.try_emplace(power(g_, x, n.exp), Assignment<G>{{n.var, x}});
    return out;
  }

  ValueSet<G> values_of(const Word &w, const Word::Product &n)
  {
    if (!disjoint(n.factors))
      return enumerate(w);
    ValueSet<G> acc;
    acc.emplace(g_.identity(), Assignment<G>{});
    for (const auto &f : n.factors) {
      ValueSet<G> vf = values(f);
      charge(BigInt(acc.size()) * vf.size(), "law evaluation");
      ValueSet<G> next;
      for (const auto &[a, wa] : acc)
        for (const auto &[b, wb] : vf)
          if (auto x = g_.multiply(a, b); !next.count(x)) {
            Assignment<G> merged = wa;
            merged.insert(wb.begin(), wb.end());
            next.emplace(std::move(x), std::move(merged));
          }
      acc = std::move(next);
    }
    return acc;
  }

  ValueSet<G> values_of(const Word &, const Word::Inverse &n)
  {
    ValueSet<G> out;
    for (const auto &[x, wx] : values(n.inner))
      out.try_emplace(g_.inverse(x), wx);
    return out;
  }

  ValueSet<G> values_of(const Word &, const Word::Power &n)
  {
    ValueSet<G> out;
    for (const auto &[x, wx] : values(n.inner))
      out.try_emplace(power(g_, x, n.n), wx);
    return out;
  }

  ValueSet<G> values_of(const Word &w, const Word::Commutator &n)
  {
    if (!disjoint({n.left, n.right}))
      return enumerate(w);
    ValueSet<G> vl = values(n.left);
    ValueSet<G> vr = values(n.right);
    charge(BigInt(vl.size()) * vr.size(), "law evaluation");
    ValueSet<G> out;
    for (const auto &[a, wa] : vl)
      for (const auto &[b, wb] : vr)
        if (auto x = commutator(g_, a, b); !out.count(x)) {
          Assignment<G> merged = wa;
          merged.insert(wb.begin(), wb.end());
          out.emplace(std::move(x), std::move(merged));
        }
    return out;
  }

  // All assignments of w's variables, evaluated directly.
  ValueSet<G> enumerate(const Word &w)
  {
    auto vars = w.variables();
    BigInt total = boost::multiprecision::pow(BigInt(elems_.size()), static_cast<unsigned>(vars.size()));
    charge(total, "assignment enumeration");
    ValueSet<G> out;
    std::vector<int> vs(vars.begin(), vars.end());
    std::vector<std::size_t> idx(vs.size(), 0);
    for (;;) {
      Assignment<G> a;
      for (std::size_t i = 0; i < vs.size(); ++i)
        a.emplace(vs[i], elems_[idx[i]]);
      out.try_emplace(eval_word(w, g_, a), a);
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == elems_.size())
        idx[pos++] = 0;
      if (pos == idx.size())
        break;
    }
    return out;
  }

  const G &g_;
  const std::vector<Element<G>> &elems_;
  std::uint64_t budget_;
  std::uint64_t evaluations_ = 0;
};

} // namespace detail

/// Checks w == 1 on the group generated by g.generators(). Exhaustive mode is
/// sound and complete; sampled mode only ever reports genuine counterexamples.
template <FiniteGroup G>
IdentityCheck<G> holds_identity(const G &g, const Word &w, CheckMode mode = Exhaustive{},
                                std::uint64_t universe = Budget{}.universe)
{
  const auto elems = all_elements(g, universe);
  IdentityCheck<G> result;
  if (const auto *ex = std::get_if<Exhaustive>(&mode)) {
    detail::ValueSetEvaluator<G> eval(g, elems, ex->budget);
    auto values = eval.values(w);
    result.evaluations = eval.evaluations();
    for (auto &[x, witness] : values) {
      if (!(x == g.identity())) {
        result.counterexample = witness;
        break;
      }
    }
    return result;
  }

  const auto &sm = std::get<Sampled>(mode);
  std::mt19937_64 rng(sm.seed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  const auto vars = w.variables();
  for (std::uint64_t i = 0; i < sm.count; ++i) {
    Assignment<G> a;
    for (int v : vars)
      a.emplace(v, elems[pick(rng)]);
    ++result.evaluations;
    if (!(eval_word(w, g, a) == g.identity())) {
      result.counterexample = std::move(a);
      break;
    }
  }
  return result;
}

/// An assignment making every word of `words` non-trivial at once, or
/// nullopt if none exists. Assignments are tried in mixed-radix order over
/// the group elements in closure order.
template <FiniteGroup G>
std::optional<Assignment<G>> discriminate(const G &g, const std::vector<Word> &words,
                                          const Budget &budget = {})
{
  const auto elems = all_elements(g, budget.universe);
  std::set<int> all;
  for (const auto &w : words) {
    auto vs = w.variables();
    all.insert(vs.begin(), vs.end());
  }
  BigInt total = boost::multiprecision::pow(BigInt(elems.size()), static_cast<unsigned>(all.size()));
  if (total > budget.tuples)
    throw budget_exceeded("discrimination search", total, budget.tuples);

  std::vector<int> vs(all.begin(), all.end());
  std::vector<std::size_t> idx(vs.size(), 0);
  for (;;) {
    Assignment<G> a;
    for (std::size_t i = 0; i < vs.size(); ++i)
      a.emplace(vs[i], elems[idx[i]]);
    bool all_nontrivial = true;
    for (const auto &w : words) {
      if (eval_word(w, g, a) == g.identity()) {
        all_nontrivial = false;
        break;
      }
    }
    if (all_nontrivial)
      return a;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == elems.size())
      idx[pos++] = 0;
    if (pos == idx.size())
      return std::nullopt;
  }
}

} // namespace wrvar::oracle
