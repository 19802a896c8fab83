/**
 * @file cardinal.hpp
 * @brief Natural numbers extended by a single infinite value.
 *
 * Every infinite cardinal collapses to one value `inf`. `Cardinal` counts
 * multiplicities (and may be zero); `ExtNat` holds exponents and is always
 * positive.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wrvar {

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("wrvar: integer overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("wrvar: integer overflow in multiplication");
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned e)
{
  std::uint64_t r = 1;
  while (e--)
    r = checked_mul(r, base);
  return r;
}

} // namespace detail

class Cardinal {
public:
  constexpr Cardinal() = default;
  constexpr Cardinal(std::uint64_t n) : value_(n) {}

  static constexpr Cardinal inf() { return Cardinal(inf_tag{}); }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }
  constexpr bool is_zero() const { return !inf_ && value_ == 0; }

  std::uint64_t value() const
  {
    if (inf_)
      throw std::domain_error("wrvar: value() of infinite cardinal");
    return value_;
  }

  friend Cardinal operator+(Cardinal a, Cardinal b)
  {
    if (a.inf_ || b.inf_)
      return inf();
    return detail::checked_add(a.value_, b.value_);
  }

  // 0 absorbs INF; otherwise INF absorbs everything.
  friend Cardinal operator*(Cardinal a, Cardinal b)
  {
    if (a.is_zero() || b.is_zero())
      return Cardinal(0);
    if (a.inf_ || b.inf_)
      return inf();
    return detail::checked_mul(a.value_, b.value_);
  }

  Cardinal &operator+=(Cardinal o) { return *this = *this + o; }
  Cardinal &operator*=(Cardinal o) { return *this = *this * o; }

  friend constexpr bool operator==(Cardinal a, Cardinal b)
  {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(Cardinal a, Cardinal b)
  {
    if (a.inf_ || b.inf_)
      return a.inf_ <=> b.inf_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return inf_ ? "inf" : std::to_string(value_); }

  friend std::ostream &operator<<(std::ostream &os, Cardinal c) { return os << c.to_string(); }

private:
  struct inf_tag {};
  constexpr explicit Cardinal(inf_tag) : inf_(true) {}

  std::uint64_t value_ = 0;
  bool inf_ = false;
};

/// Positive integer or INF; used for group exponents.
class ExtNat {
public:
  constexpr ExtNat() = default;
  ExtNat(std::uint64_t n) : value_(n)
  {
    if (n == 0)
      throw std::invalid_argument("wrvar: ExtNat must be positive");
  }

  static constexpr ExtNat inf() { return ExtNat(inf_tag{}); }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }

  std::uint64_t value() const
  {
    if (inf_)
      throw std::domain_error("wrvar: value() of infinite exponent");
    return value_;
  }

  friend ExtNat lcm(ExtNat a, ExtNat b)
  {
    if (a.inf_ || b.inf_)
      return inf();
    std::uint64_t g = std::gcd(a.value_, b.value_);
    return detail::checked_mul(a.value_ / g, b.value_);
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b)
  {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b)
  {
    if (a.inf_ || b.inf_)
      return a.inf_ <=> b.inf_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return inf_ ? "inf" : std::to_string(value_); }

  friend std::ostream &operator<<(std::ostream &os, ExtNat e) { return os << e.to_string(); }

private:
  struct inf_tag {};
  constexpr explicit ExtNat(inf_tag) : inf_(true) {}

  std::uint64_t value_ = 1;
  bool inf_ = false;
};

} // namespace wrvar
