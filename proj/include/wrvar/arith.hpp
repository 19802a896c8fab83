/**
 * @file arith.hpp
 * @brief Primality, factorisation and valuations on 64-bit integers.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wrvar {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Pollard rho with Brent's cycle detection; n must be an odd composite.
inline std::uint64_t pollard_rho(std::uint64_t n)
{
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n)
      return d;
  }
}

} // namespace detail

/// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

/// Prime factorisation as prime -> exponent. factorize(1) is empty.
inline std::map<std::uint64_t, unsigned> factorize(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("wrvar: cannot factorise 0");
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  std::vector<std::uint64_t> todo;
  if (n > 1)
    todo.push_back(n);
  while (!todo.empty()) {
    std::uint64_t m = todo.back();
    todo.pop_back();
    if (is_prime(m)) {
      ++out[m];
      continue;
    }
    std::uint64_t d = detail::pollard_rho(m);
    todo.push_back(d);
    todo.push_back(m / d);
  }
  return out;
}

/// p-adic valuation; s must be positive.
inline unsigned valuation(std::uint64_t s, std::uint64_t p)
{
  unsigned v = 0;
  while (s % p == 0) {
    s /= p;
    ++v;
  }
  return v;
}

} // namespace wrvar
