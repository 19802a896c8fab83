/**
 * @file abelian_descriptor.hpp
 * @brief Structural descriptors of abelian groups given as direct sums of
 *        cycles, and the layer/exponent computations on them.
 *
 * A descriptor records a free rank, a multiset of primary cyclic summands
 * C_{p^k} with cardinal multiplicities, and the primes at which the torsion
 * part has unbounded element orders. Two descriptors of bounded groups are
 * equal iff the groups are isomorphic.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wrvar/arith.hpp"
#include "wrvar/cardinal.hpp"

namespace wrvar {

class infinite_exponent_error : public std::domain_error {
public:
  infinite_exponent_error() : std::domain_error("infinite exponent") {}
};

struct PrimePower {
  std::uint64_t p = 2;
  unsigned k = 1;

  friend auto operator<=>(const PrimePower &, const PrimePower &) = default;
};

/// One entry of an unnormalised cyclic decomposition: `multiplicity` copies of C_order.
struct CyclicTerm {
  std::uint64_t order = 1;
  Cardinal multiplicity = 1;
};

class AbelianDescriptor {
public:
  using SummandMap = std::map<PrimePower, Cardinal>;

  AbelianDescriptor() = default;

  /// Validating constructor: keys must be prime powers with k >= 1; zero
  /// multiplicities are dropped.
  AbelianDescriptor(SummandMap summands, Cardinal free_rank = 0,
                    std::set<std::uint64_t> unbounded_primes = {})
      : free_rank_(free_rank), unbounded_primes_(std::move(unbounded_primes))
  {
    for (auto &[key, mult] : summands) {
      if (key.k < 1 || !is_prime(key.p))
        throw std::invalid_argument("wrvar: summand key must be (prime, k >= 1)");
      if (!mult.is_zero())
        summands_.emplace(key, mult);
    }
    for (auto p : unbounded_primes_) {
      if (!is_prime(p))
        throw std::invalid_argument("wrvar: unbounded torsion prime must be prime");
    }
  }

  /// Splits composite-order cycles by CRT and merges equal (p, k) keys.
  static AbelianDescriptor canonicalize(const std::vector<CyclicTerm> &raw,
                                        Cardinal free_rank = 0,
                                        std::set<std::uint64_t> unbounded_primes = {})
  {
    SummandMap merged;
    for (const auto &term : raw) {
      if (term.order == 0)
        throw std::invalid_argument("wrvar: cyclic order must be >= 1");
      if (term.multiplicity.is_zero())
        continue;
      for (auto [p, a] : factorize(term.order))
        merged[PrimePower{p, a}] += term.multiplicity;
    }
    return AbelianDescriptor(std::move(merged), free_rank, std::move(unbounded_primes));
  }

  const Cardinal &free_rank() const { return free_rank_; }
  const SummandMap &summands() const { return summands_; }
  const std::set<std::uint64_t> &unbounded_primes() const { return unbounded_primes_; }
  bool unbounded_torsion() const { return !unbounded_primes_.empty(); }

  bool is_trivial() const
  {
    return summands_.empty() && free_rank_.is_zero() && unbounded_primes_.empty();
  }

  bool has_finite_exponent() const { return free_rank_.is_zero() && !unbounded_torsion(); }

  /// True when the group itself is finite.
  bool is_finite_group() const
  {
    return has_finite_exponent() &&
           std::all_of(summands_.begin(), summands_.end(),
                       [](const auto &e) { return e.second.is_finite(); });
  }

  Cardinal multiplicity(std::uint64_t p, unsigned k) const
  {
    auto it = summands_.find(PrimePower{p, k});
    return it == summands_.end() ? Cardinal(0) : it->second;
  }

  /// Primes occurring in the torsion part (bounded summands or unbounded flags).
  std::set<std::uint64_t> primes() const
  {
    std::set<std::uint64_t> out(unbounded_primes_);
    for (const auto &[key, mult] : summands_)
      out.insert(key.p);
    return out;
  }

  friend bool operator==(const AbelianDescriptor &, const AbelianDescriptor &) = default;

private:
  Cardinal free_rank_ = 0;
  SummandMap summands_;
  std::set<std::uint64_t> unbounded_primes_;
};

inline void require_finite_exponent(const AbelianDescriptor &d)
{
  if (!d.has_finite_exponent())
    throw infinite_exponent_error();
}

inline ExtNat exponent(const AbelianDescriptor &d)
{
  if (!d.has_finite_exponent())
    return ExtNat::inf();
  ExtNat e = 1;
  for (const auto &[key, mult] : d.summands())
    e = lcm(e, ExtNat(detail::checked_pow(key.p, key.k)));
  return e;
}

/// Largest k with p^k dividing the exponent.
inline unsigned k_of(const AbelianDescriptor &d, std::uint64_t p)
{
  require_finite_exponent(d);
  unsigned k = 0;
  for (const auto &[key, mult] : d.summands()) {
    if (key.p == p)
      k = std::max(k, key.k);
  }
  return k;
}

inline AbelianDescriptor primary_component(const AbelianDescriptor &d, std::uint64_t p)
{
  require_finite_exponent(d);
  AbelianDescriptor::SummandMap out;
  for (const auto &[key, mult] : d.summands()) {
    if (key.p == p)
      out.emplace(key, mult);
  }
  return AbelianDescriptor(std::move(out));
}

/// B[s]: the subgroup generated by elements whose order divides s.
inline AbelianDescriptor bounded_subgroup(const AbelianDescriptor &d, std::int64_t s)
{
  if (s <= 0)
    throw std::invalid_argument("wrvar: bounded_subgroup needs s >= 1");
  require_finite_exponent(d);
  AbelianDescriptor::SummandMap out;
  for (const auto &[key, mult] : d.summands()) {
    unsigned k = std::min(key.k, valuation(static_cast<std::uint64_t>(s), key.p));
    if (k > 0)
      out[PrimePower{key.p, k}] += mult;
  }
  return AbelianDescriptor(std::move(out));
}

/// Rank of B[p^k]/B[p^{k-1}]: the number of summands C_{p^j} with j >= k.
inline Cardinal layer_rank(const AbelianDescriptor &d, std::uint64_t p, unsigned k)
{
  if (k == 0)
    throw std::invalid_argument("wrvar: layer index k must be >= 1");
  require_finite_exponent(d);
  Cardinal mu = 0;
  for (const auto &[key, mult] : d.summands()) {
    if (key.p == p && key.k >= k)
      mu += mult;
  }
  return mu;
}

/// B[p^k]/B[p^{k-1}] as the elementary abelian descriptor {(p,1): mu}.
inline AbelianDescriptor layer_quotient(const AbelianDescriptor &d, std::uint64_t p, int k)
{
  if (k <= 0)
    throw std::invalid_argument("wrvar: layer index k must be >= 1");
  Cardinal mu = layer_rank(d, p, static_cast<unsigned>(k));
  if (mu.is_zero())
    return {};
  return AbelianDescriptor({{PrimePower{p, 1}, mu}});
}

inline Cardinal top_layer_multiplicity(const AbelianDescriptor &d, std::uint64_t p)
{
  unsigned k = k_of(d, p);
  if (k == 0)
    throw std::domain_error("p does not divide exponent");
  return d.multiplicity(p, k);
}

inline AbelianDescriptor direct_sum(const AbelianDescriptor &a, const AbelianDescriptor &b)
{
  auto summands = a.summands();
  for (const auto &[key, mult] : b.summands())
    summands[key] += mult;
  auto unbounded = a.unbounded_primes();
  unbounded.insert(b.unbounded_primes().begin(), b.unbounded_primes().end());
  return AbelianDescriptor(std::move(summands), a.free_rank() + b.free_rank(),
                           std::move(unbounded));
}

inline AbelianDescriptor direct_power(const AbelianDescriptor &d, Cardinal c)
{
  if (c.is_zero())
    throw std::invalid_argument("wrvar: direct_power needs c >= 1");
  auto summands = d.summands();
  for (auto &[key, mult] : summands)
    mult *= c;
  return AbelianDescriptor(std::move(summands), d.free_rank() * c, d.unbounded_primes());
}

/// Summand exponents at p in non-increasing order, truncated or zero-padded
/// to `count` entries. Infinite multiplicities repeat until the count is met.
inline std::vector<unsigned> summand_exponents(const AbelianDescriptor &d, std::uint64_t p,
                                               std::size_t count)
{
  std::vector<unsigned> ks;
  ks.reserve(count);
  const auto &m = d.summands();
  for (auto it = m.rbegin(); it != m.rend() && ks.size() < count; ++it) {
    if (it->first.p != p)
      continue;
    std::size_t remaining = count - ks.size();
    const Cardinal &mult = it->second;
    std::size_t n = mult.is_inf() ? remaining
                                  : static_cast<std::size_t>(
                                        std::min<std::uint64_t>(mult.value(), remaining));
    ks.insert(ks.end(), n, it->first.k);
  }
  ks.resize(count, 0);
  return ks;
}

/// Order of a finite descriptor; 0 when the group is infinite or the order
/// does not fit in 64 bits.
inline std::uint64_t finite_order(const AbelianDescriptor &d)
{
  if (!d.is_finite_group())
    return 0;
  std::uint64_t n = 1;
  try {
    for (const auto &[key, mult] : d.summands()) {
      if (mult.value() > 64)
        return 0;
      n = detail::checked_mul(n, detail::checked_pow(detail::checked_pow(key.p, key.k),
                                                     static_cast<unsigned>(mult.value())));
    }
  } catch (const std::overflow_error &) {
    return 0;
  }
  return n;
}

} // namespace wrvar
