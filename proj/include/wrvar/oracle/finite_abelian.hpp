/**
 * @file finite_abelian.hpp
 * @brief Concrete finite abelian groups C_{n_1} x ... x C_{n_r}.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wrvar/abelian_descriptor.hpp"
#include "wrvar/oracle/group.hpp"

namespace wrvar::oracle {

class FiniteAbelianGroup {
public:
  using element_type = std::vector<std::uint32_t>;
  using element_hash = VectorHash;

  FiniteAbelianGroup() = default;

  explicit FiniteAbelianGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders))
  {
    for (auto n : orders_) {
      if (n < 2)
        throw std::invalid_argument("wrvar: cyclic factor orders must be >= 2");
      order_ = detail::checked_mul(order_, n);
    }
  }

  /// Realises a finite descriptor as the direct product of its primary cycles.
  static FiniteAbelianGroup from_descriptor(const AbelianDescriptor &d)
  {
    if (!d.is_finite_group())
      throw std::domain_error("wrvar: descriptor is not a finite group");
    std::vector<std::uint32_t> orders;
    for (const auto &[key, mult] : d.summands()) {
      auto q = detail::checked_pow(key.p, key.k);
      if (q > UINT32_MAX)
        throw std::overflow_error("wrvar: cyclic factor too large for the oracle");
      orders.insert(orders.end(), mult.value(), static_cast<std::uint32_t>(q));
    }
    return FiniteAbelianGroup(std::move(orders));
  }

  const std::vector<std::uint32_t> &orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::uint64_t order() const { return order_; }

  std::uint64_t exponent() const
  {
    std::uint64_t e = 1;
    for (auto n : orders_)
      e = std::lcm(e, std::uint64_t{n});
    return e;
  }

  element_type identity() const { return element_type(orders_.size(), 0); }

  element_type multiply(const element_type &a, const element_type &b) const
  {
    element_type r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
      r[i] = (a[i] + b[i]) % orders_[i];
    return r;
  }

  element_type inverse(const element_type &a) const
  {
    element_type r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
      r[i] = (orders_[i] - a[i]) % orders_[i];
    return r;
  }

  std::vector<element_type> generators() const
  {
    std::vector<element_type> gens;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      element_type e = identity();
      e[i] = 1;
      gens.push_back(std::move(e));
    }
    return gens;
  }

  /// Mixed-radix index, first coordinate least significant.
  std::uint64_t index_of(const element_type &a) const
  {
    std::uint64_t idx = 0;
    for (std::size_t i = orders_.size(); i-- > 0;)
      idx = idx * orders_[i] + a[i];
    return idx;
  }

  element_type element_at(std::uint64_t idx) const
  {
    element_type r(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      r[i] = static_cast<std::uint32_t>(idx % orders_[i]);
      idx /= orders_[i];
    }
    return r;
  }

  std::string name() const
  {
    if (orders_.empty())
      return "1";
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i)
      s += (i ? "xC" : "C") + std::to_string(orders_[i]);
    return s;
  }

private:
  std::vector<std::uint32_t> orders_;
  std::uint64_t order_ = 1;
};

} // namespace wrvar::oracle
