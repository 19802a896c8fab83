/**
 * @file group.hpp
 * @brief Exhaustive finite-group machinery: subgroup closure, lower central
 *        series and maximal class of t-generated subgroups.
 *
 * Every algorithm is generic over a `FiniteGroup`: a value type exposing
 * identity, multiplication, inversion and a generating set, with hashable
 * elements. Sizes are guarded by explicit budgets; nothing is truncated
 * silently.
 */
#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wrvar::oracle {

using BigInt = boost::multiprecision::cpp_int;

struct Budget {
  std::uint64_t universe = std::uint64_t{1} << 24; ///< elements of a constructed group
  std::uint64_t tuples = std::uint64_t{1} << 20;   ///< enumerated assignments or subsets
};

class budget_exceeded : public std::runtime_error {
public:
  budget_exceeded(const std::string &what, BigInt required, std::uint64_t limit)
      : std::runtime_error("budget exceeded: " + what + " needs " + required.str() +
                           " > " + std::to_string(limit)),
        required_(std::move(required)), limit_(limit)
  {}

  const BigInt &required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

private:
  BigInt required_;
  std::uint64_t limit_;
};

template <class G>
concept FiniteGroup = requires(const G &g, const typename G::element_type &x) {
  typename G::element_hash;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.multiply(x, x) } -> std::convertible_to<typename G::element_type>;
  { g.inverse(x) } -> std::convertible_to<typename G::element_type>;
  { g.generators() } -> std::convertible_to<std::vector<typename G::element_type>>;
  { g.order() } -> std::convertible_to<std::uint64_t>;
};

/// Hash for vectors of small integers (FNV-1a over the words).
struct VectorHash {
  template <class T>
  std::size_t operator()(const std::vector<T> &v) const noexcept
  {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto &x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

template <FiniteGroup G>
using Element = typename G::element_type;

template <FiniteGroup G>
using ElementSet = std::unordered_set<Element<G>, typename G::element_hash>;

template <FiniteGroup G>
struct Subgroup {
  std::vector<Element<G>> elements; ///< breadth-first order, identity first
  ElementSet<G> members;

  std::size_t size() const { return elements.size(); }
  bool contains(const Element<G> &x) const { return members.count(x) != 0; }
};

template <FiniteGroup G>
Element<G> power(const G &g, const Element<G> &x, std::int64_t n)
{
  Element<G> base = n < 0 ? g.inverse(x) : x;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Element<G> r = g.identity();
  while (e) {
    if (e & 1)
      r = g.multiply(r, base);
    e >>= 1;
    if (e)
      base = g.multiply(base, base);
  }
  return r;
}

/// [x, y] = x^-1 y^-1 x y
template <FiniteGroup G>
Element<G> commutator(const G &g, const Element<G> &x, const Element<G> &y)
{
  return g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y));
}

/// Breadth-first closure of `gens` under right multiplication by generators.
/// In a finite group this is the generated subgroup.
template <FiniteGroup G>
Subgroup<G> generated_subgroup(const G &g, const std::vector<Element<G>> &gens, std::uint64_t cap)
{
  if (cap < 1)
    throw std::invalid_argument("wrvar: closure cap must be >= 1");
  Subgroup<G> sub;
  sub.elements.push_back(g.identity());
  sub.members.insert(g.identity());
  for (std::size_t head = 0; head < sub.elements.size(); ++head) {
    for (const auto &s : gens) {
      Element<G> y = g.multiply(sub.elements[head], s);
      if (sub.members.insert(y).second) {
        if (sub.elements.size() >= cap)
          throw budget_exceeded("subgroup closure", BigInt(sub.elements.size() + 1), cap);
        sub.elements.push_back(std::move(y));
      }
    }
  }
  return sub;
}

/// All elements of the group, enumerated through its generating set.
template <FiniteGroup G>
std::vector<Element<G>> all_elements(const G &g, std::uint64_t cap = Budget{}.universe)
{
  return generated_subgroup(g, g.generators(), cap).elements;
}

struct LowerCentralSeries {
  unsigned nilpotency_class = 0;
  std::vector<std::uint64_t> orders; ///< |gamma_1|, |gamma_2|, ..., ending in 1
};

/// Normal closure in <gens> of the subgroup generated by `seed`. `seed` is
/// extended in place by the conjugates that had to be added.
template <FiniteGroup G>
Subgroup<G> normal_closure(const G &g, std::vector<Element<G>> &seed,
                           const std::vector<Element<G>> &gens, std::uint64_t cap)
{
  Subgroup<G> n = generated_subgroup(g, seed, cap);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < seed.size(); ++i) {
      for (const auto &y : gens) {
        Element<G> c = g.multiply(g.multiply(g.inverse(y), seed[i]), y);
        if (!n.contains(c)) {
          seed.push_back(std::move(c));
          n = generated_subgroup(g, seed, cap);
          grew = true;
        }
      }
    }
  }
  return n;
}

/// Lower central series of <gens>: gamma_{i+1} is the normal closure of the
/// commutators of gamma_i's generators with the group generators.
template <FiniteGroup G>
LowerCentralSeries nilpotency_class(const G &g, const std::vector<Element<G>> &gens,
                                    std::uint64_t cap = Budget{}.universe,
                                    unsigned max_length = 4096)
{
  LowerCentralSeries out;
  Subgroup<G> current = generated_subgroup(g, gens, cap);
  out.orders.push_back(current.size());
  std::vector<Element<G>> current_gens;
  for (const auto &x : gens) {
    if (!(x == g.identity()))
      current_gens.push_back(x);
  }
  while (current.size() > 1) {
    if (out.nilpotency_class >= max_length)
      throw std::runtime_error("wrvar: lower central series did not terminate");
    std::vector<Element<G>> next_gens;
    ElementSet<G> seen;
    for (const auto &x : current_gens) {
      for (const auto &y : gens) {
        Element<G> c = commutator(g, x, y);
        if (!(c == g.identity()) && seen.insert(c).second)
          next_gens.push_back(std::move(c));
      }
    }
    Subgroup<G> next = normal_closure(g, next_gens, gens, cap);
    if (next.size() == current.size())
      throw std::runtime_error("wrvar: group is not nilpotent");
    ++out.nilpotency_class;
    out.orders.push_back(next.size());
    current = std::move(next);
    current_gens = std::move(next_gens);
  }
  return out;
}

/// Same series computed from all commutators [x, y], x in gamma_i, y in G.
/// Quadratic in the group order; used to cross-check nilpotency_class.
template <FiniteGroup G>
LowerCentralSeries nilpotency_class_full(const G &g, const std::vector<Element<G>> &gens,
                                         std::uint64_t cap = Budget{}.universe)
{
  LowerCentralSeries out;
  Subgroup<G> whole = generated_subgroup(g, gens, cap);
  Subgroup<G> current = whole;
  out.orders.push_back(current.size());
  while (current.size() > 1) {
    ElementSet<G> seen;
    std::vector<Element<G>> comms;
    for (const auto &x : current.elements) {
      for (const auto &y : whole.elements) {
        Element<G> c = commutator(g, x, y);
        if (seen.insert(c).second)
          comms.push_back(std::move(c));
      }
    }
    Subgroup<G> next = generated_subgroup(g, comms, cap);
    if (next.size() == current.size())
      throw std::runtime_error("wrvar: group is not nilpotent");
    ++out.nilpotency_class;
    out.orders.push_back(next.size());
    current = std::move(next);
  }
  return out;
}

/// Maximum nilpotency class over all subgroups generated by at most t
/// elements. Subsets are enumerated as multisets of size t; subgroups that
/// arise repeatedly are classified once.
template <FiniteGroup G>
unsigned max_class_t_generated(const G &g, unsigned t, const Budget &budget = {})
{
  if (t < 1)
    throw std::invalid_argument("wrvar: t must be >= 1");
  const auto elems = all_elements(g, budget.universe);
  const std::size_t n = elems.size();

  // C(n + t - 1, t) multisets
  BigInt count = 1;
  for (unsigned i = 0; i < t; ++i)
    count = count * (n + i) / (i + 1);
  if (count > budget.tuples)
    throw budget_exceeded("t-subset enumeration", count, budget.tuples);

  std::unordered_map<Element<G>, std::size_t, typename G::element_hash> index;
  for (std::size_t i = 0; i < n; ++i)
    index.emplace(elems[i], i);

  std::unordered_map<std::vector<std::uint64_t>, unsigned, VectorHash> seen;
  unsigned best = 0;
  std::vector<std::size_t> pick(t, 0);
  for (;;) {
    std::vector<Element<G>> gens;
    for (auto i : pick)
      gens.push_back(elems[i]);
    Subgroup<G> h = generated_subgroup(g, gens, budget.universe);
    std::vector<std::uint64_t> key((n + 63) / 64, 0);
    for (const auto &x : h.elements) {
      std::size_t i = index.at(x);
      key[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    auto it = seen.find(key);
    if (it == seen.end())
      it = seen.emplace(std::move(key), nilpotency_class(g, gens, budget.universe).nilpotency_class).first;
    best = std::max(best, it->second);

    // next non-decreasing index tuple
    std::size_t pos = t;
    while (pos > 0 && pick[pos - 1] == n - 1)
      --pos;
    if (pos == 0)
      break;
    std::size_t v = pick[pos - 1] + 1;
    for (std::size_t j = pos - 1; j < t; ++j)
      pick[j] = v;
  }
  return best;
}

} // namespace wrvar::oracle
