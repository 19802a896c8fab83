// Test-only helpers: an element-counting structure oracle for finite abelian
// groups and random descriptor generators for property tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wrvar/abelian_descriptor.hpp"
#include "wrvar/oracle/finite_abelian.hpp"

namespace wrvar::testing {

/// Isomorphism type of a subgroup H (given by its elements) of a finite
/// abelian group, recovered only from element orders: with
/// c_j = log_p |{h : p^j h = 0}|, the number of summands of order at least
/// p^j is c_j - c_{j-1}.
inline AbelianDescriptor structure_of(const oracle::FiniteAbelianGroup &g,
                                      const std::vector<oracle::FiniteAbelianGroup::element_type> &h)
{
  AbelianDescriptor::SummandMap out;
  std::uint64_t exp = g.exponent();
  for (auto [p, top] : factorize(exp)) {
    std::vector<unsigned> c(top + 1, 0);
    for (unsigned j = 1; j <= top; ++j) {
      std::uint64_t q = detail::checked_pow(p, j);
      std::uint64_t count = 0;
      for (const auto &x : h)
        count += oracle::power(g, x, static_cast<std::int64_t>(q)) == g.identity();
      unsigned lg = 0;
      while (count % p == 0 && count > 1) {
        count /= p;
        ++lg;
      }
      c[j] = lg;
    }
    // at_least[j] = number of summands with exponent >= j
    for (unsigned j = 1; j <= top; ++j) {
      unsigned at_least_j = c[j] - c[j - 1];
      unsigned at_least_next = j < top ? c[j + 1] - c[j] : 0;
      if (at_least_j > at_least_next)
        out[PrimePower{p, j}] = at_least_j - at_least_next;
    }
  }
  return AbelianDescriptor(out);
}

/// Random descriptors over small primes; infinite multiplicities with
/// probability ~1/4 per summand.
class DescriptorGen {
public:
  explicit DescriptorGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
  {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

  Cardinal multiplicity(bool allow_inf = true)
  {
    if (allow_inf && uniform(0, 3) == 0)
      return Cardinal::inf();
    return uniform(1, 4);
  }

  /// Bounded torsion descriptor over primes {2,3,5}, exponents up to max_k.
  AbelianDescriptor bounded(unsigned max_k = 3, bool allow_inf = true)
  {
    AbelianDescriptor::SummandMap m;
    for (std::uint64_t p : {2, 3, 5}) {
      if (uniform(0, 2) == 0)
        continue;
      for (unsigned k = 1; k <= max_k; ++k)
        if (uniform(0, 1))
          m[PrimePower{p, k}] = multiplicity(allow_inf);
    }
    return AbelianDescriptor(m);
  }

  /// Any descriptor: occasionally with free rank or unbounded torsion.
  AbelianDescriptor any()
  {
    auto d = bounded();
    switch (uniform(0, 7)) {
    case 0:
      return AbelianDescriptor(d.summands(), uniform(1, 2));
    case 1:
      return AbelianDescriptor(d.summands(), 0, {uniform(0, 1) ? 2u : 3u});
    default:
      return d;
    }
  }

  /// A p-group descriptor with at least one summand.
  AbelianDescriptor p_group(std::uint64_t p, unsigned max_k = 3, bool allow_inf = true)
  {
    AbelianDescriptor::SummandMap m;
    m[PrimePower{p, static_cast<unsigned>(uniform(1, max_k))}] = multiplicity(allow_inf);
    for (unsigned k = 1; k <= max_k; ++k)
      if (uniform(0, 2) == 0)
        m[PrimePower{p, k}] = multiplicity(allow_inf);
    return AbelianDescriptor(m);
  }

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace wrvar::testing
