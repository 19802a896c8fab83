/**
 * @file wreath.hpp
 * @brief The (standard, regular) wreath product A wr B of finite abelian groups.
 *
 * An element is a pair (b, f) with b in B and f : B -> A. The product is
 * (b, f)(b', f') = (b + b', g -> f(g) + f'(g - b)). For finite B the
 * cartesian and direct base groups coincide.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "wrvar/oracle/finite_abelian.hpp"
#include "wrvar/oracle/group.hpp"

namespace wrvar::oracle {

/// Dense encoding: `top` is the index of b in B, `base` stores f(g) for every
/// g in index order, each as rank(A) residues.
struct WreathElement {
  std::uint32_t top = 0;
  std::vector<std::uint32_t> base;

  friend bool operator==(const WreathElement &, const WreathElement &) = default;
};

struct WreathElementHash {
  std::size_t operator()(const WreathElement &x) const noexcept
  {
    return VectorHash{}(x.base) * 31u + x.top;
  }
};

class WreathProduct {
public:
  using element_type = WreathElement;
  using element_hash = WreathElementHash;

  /// Throws budget_exceeded when |A|^|B| * |B| exceeds `universe`.
  WreathProduct(FiniteAbelianGroup a, FiniteAbelianGroup b, std::uint64_t universe = Budget{}.universe)
      : a_(std::move(a)), b_(std::move(b))
  {
    // Exact size unless |B| is absurdly large, where a lower bound suffices.
    const unsigned exp = static_cast<unsigned>(std::min<std::uint64_t>(b_.order(), 4096));
    BigInt size = boost::multiprecision::pow(BigInt(a_.order()), exp) * b_.order();
    if (size > universe)
      throw budget_exceeded("wreath product " + a_.name() + " wr " + b_.name(), size, universe);
    order_ = static_cast<std::uint64_t>(size);

    const std::uint64_t nb = b_.order();
    sum_.resize(nb * nb);
    diff_.resize(nb * nb);
    for (std::uint64_t g = 0; g < nb; ++g) {
      auto eg = b_.element_at(g);
      for (std::uint64_t h = 0; h < nb; ++h) {
        auto eh = b_.element_at(h);
        sum_[g * nb + h] = static_cast<std::uint32_t>(b_.index_of(b_.multiply(eg, eh)));
        diff_[g * nb + h] = static_cast<std::uint32_t>(b_.index_of(b_.multiply(eg, b_.inverse(eh))));
      }
    }
  }

  const FiniteAbelianGroup &passive() const { return a_; }
  const FiniteAbelianGroup &active() const { return b_; }
  std::uint64_t order() const { return order_; }

  element_type identity() const
  {
    return {0, std::vector<std::uint32_t>(b_.order() * a_.rank(), 0)};
  }

  element_type multiply(const element_type &x, const element_type &y) const
  {
    const std::size_t nb = b_.order();
    const std::size_t na = a_.rank();
    const auto &ord = a_.orders();
    element_type r{sum_[x.top * nb + y.top], std::vector<std::uint32_t>(nb * na)};
    for (std::size_t g = 0; g < nb; ++g) {
      const std::size_t shifted = diff_[g * nb + x.top];
      for (std::size_t j = 0; j < na; ++j)
        r.base[g * na + j] = (x.base[g * na + j] + y.base[shifted * na + j]) % ord[j];
    }
    return r;
  }

  element_type inverse(const element_type &x) const
  {
    const std::size_t nb = b_.order();
    const std::size_t na = a_.rank();
    const auto &ord = a_.orders();
    element_type r{diff_[0 * nb + x.top], std::vector<std::uint32_t>(nb * na)};
    for (std::size_t g = 0; g < nb; ++g) {
      const std::size_t shifted = sum_[g * nb + x.top];
      for (std::size_t j = 0; j < na; ++j)
        r.base[g * na + j] = (ord[j] - x.base[shifted * na + j]) % ord[j];
    }
    return r;
  }

  /// Generators of B with zero base, then each generator of A placed at the
  /// identity of B.
  std::vector<element_type> generators() const
  {
    std::vector<element_type> gens;
    for (const auto &bg : b_.generators()) {
      element_type e = identity();
      e.top = static_cast<std::uint32_t>(b_.index_of(bg));
      gens.push_back(std::move(e));
    }
    for (const auto &ag : a_.generators()) {
      element_type e = identity();
      for (std::size_t j = 0; j < a_.rank(); ++j)
        e.base[j] = ag[j];
      gens.push_back(std::move(e));
    }
    return gens;
  }

  /// The element (b, f) from a top element and a base function given per B-index.
  element_type make(const FiniteAbelianGroup::element_type &top,
                    const std::vector<FiniteAbelianGroup::element_type> &f) const
  {
    element_type e = identity();
    e.top = static_cast<std::uint32_t>(b_.index_of(top));
    for (std::size_t g = 0; g < f.size(); ++g)
      for (std::size_t j = 0; j < a_.rank(); ++j)
        e.base[g * a_.rank() + j] = f[g][j] % a_.orders()[j];
    return e;
  }

  std::string name() const { return a_.name() + " wr " + b_.name(); }

private:
  FiniteAbelianGroup a_;
  FiniteAbelianGroup b_;
  std::uint64_t order_ = 0;
  std::vector<std::uint32_t> sum_;  // index(g + h)
  std::vector<std::uint32_t> diff_; // index(g - h)
};

/// Checked constructor matching the other oracle entry points.
inline WreathProduct build_wreath(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b,
                                  std::uint64_t universe = Budget{}.universe)
{
  return WreathProduct(a, b, universe);
}

} // namespace wrvar::oracle
