/**
 * @file nilpotency.hpp
 * @brief Closed-form nilpotency classes of wreath products of abelian
 *        p-groups and the bounds built from them.
 *
 * All values are exact (Boost.Multiprecision); p^k grows quickly and none of
 * these functions may overflow silently.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wrvar/abelian_descriptor.hpp"

namespace wrvar {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt big_pow(std::uint64_t p, unsigned k) { return boost::multiprecision::pow(BigInt(p), k); }

inline void require_prime(std::uint64_t p)
{
  if (!is_prime(p))
    throw std::invalid_argument("wrvar: p must be prime");
}

// (u-1)(p-1)p^{k-1}; the passive exponent contribution shared by every formula.
inline BigInt passive_term(std::uint64_t p, unsigned u, unsigned k)
{
  if (k == 0)
    return 0;
  return BigInt(u - 1) * (p - 1) * big_pow(p, k - 1);
}

inline std::uint64_t sum_of(std::span<const std::uint64_t> l)
{
  std::uint64_t s = 0;
  for (auto x : l)
    s = checked_add(s, x);
  return s;
}

// Sum_i l_i (p^{k-i} - 1), the contribution of the finite leading layers.
inline BigInt leading_layers(std::uint64_t p, unsigned k, std::span<const std::uint64_t> l)
{
  BigInt s = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    s += BigInt(l[i]) * (big_pow(p, k - static_cast<unsigned>(i)) - 1);
  return s;
}

inline void check_shape(unsigned k, unsigned d, std::span<const std::uint64_t> l)
{
  if (d < 1 || l.size() != d)
    throw std::invalid_argument("wrvar: shape needs d >= 1 and exactly d layer counts");
  if (d > k)
    throw std::invalid_argument("wrvar: shape needs d <= k");
}

} // namespace detail

/// Exact class of C_{p^u} wr (C_{p^{k_1}} + C_{p^{k_2}} + ...), ks non-increasing.
/// Zero entries stand for trivial summands; an all-zero or empty list gives 1.
inline BigInt liebeck_class(std::uint64_t p, unsigned u, std::span<const unsigned> ks)
{
  detail::require_prime(p);
  if (u < 1)
    throw std::invalid_argument("wrvar: liebeck_class needs u >= 1");
  if (!std::is_sorted(ks.begin(), ks.end(), std::greater<>()))
    throw std::invalid_argument("wrvar: liebeck_class needs non-increasing ks");
  BigInt c = 1;
  for (unsigned k : ks)
    c += detail::big_pow(p, k) - 1;
  if (!ks.empty())
    c += detail::passive_term(p, u, ks.front());
  return c;
}

inline BigInt liebeck_class(std::uint64_t p, unsigned u, std::initializer_list<unsigned> ks)
{
  return liebeck_class(p, u, std::span<const unsigned>(ks.begin(), ks.size()));
}

/// Upper bound on the class of t-generated groups in var(A wr B) for abelian
/// p-groups A, B of finite exponent. Missing summands beyond B's finite count
/// contribute zero.
inline BigInt lambda_bound(const AbelianDescriptor &a, const AbelianDescriptor &b, std::uint64_t t)
{
  if (t < 1)
    throw std::invalid_argument("wrvar: lambda_bound needs t >= 1");
  require_finite_exponent(a);
  require_finite_exponent(b);
  auto pa = a.primes();
  auto pb = b.primes();
  if (pa.size() != 1 || pb.size() != 1 || *pa.begin() != *pb.begin())
    throw std::invalid_argument("wrvar: lambda_bound needs non-trivial p-groups for a common p");
  std::uint64_t p = *pa.begin();
  unsigned u = k_of(a, p);
  auto ks = summand_exponents(b, p, t);
  BigInt bound = 1 + detail::passive_term(p, u, k_of(b, p));
  for (unsigned k : ks)
    bound += detail::big_pow(p, k) - 1;
  return bound;
}

/// Class of C_{p^u} wr (t-1 copies of C_{p^k}), a t-generated group of A_{p^u}.A_{p^k}.
inline BigInt nu(std::uint64_t p, unsigned u, unsigned k, std::uint64_t t)
{
  detail::require_prime(p);
  if (t < 1 || k < 1 || u < 1)
    throw std::invalid_argument("wrvar: nu needs t, k, u >= 1");
  return BigInt(t - 1) * (detail::big_pow(p, k) - 1) + detail::passive_term(p, u, k) + 1;
}

/// Least integer t with t > (p^{k-1}-1)/(p^k-p^{k-1}) + mu + 1.
inline BigInt min_t0(std::uint64_t p, unsigned k, Cardinal mu)
{
  detail::require_prime(p);
  if (k < 1)
    throw std::invalid_argument("wrvar: min_t0 needs k >= 1");
  if (mu.is_inf())
    throw std::domain_error("wrvar: min_t0 needs a finite layer rank");
  BigInt hi = detail::big_pow(p, k - 1);
  BigRational bound = BigRational(hi - 1, detail::big_pow(p, k) - hi) + BigInt(mu.value()) + 1;
  // floor(bound) + 1 is the least integer strictly above bound.
  BigInt fl = numerator(bound) / denominator(bound);
  return fl + 1;
}

/// Class of C_{p^u} wr [r*l_0 C_{p^k} + ... + r*l_{d-1} C_{p^{k-d+1}} + w C_{p^{k-d}}],
/// where w = t - r*sum(l) - 1 must be positive.
inline BigInt nu_general(std::uint64_t p, unsigned u, unsigned k, unsigned d,
                         std::span<const std::uint64_t> l, std::uint64_t r, std::uint64_t t)
{
  detail::require_prime(p);
  detail::check_shape(k, d, l);
  if (u < 1)
    throw std::invalid_argument("wrvar: nu_general needs u >= 1");
  BigInt fixed = BigInt(r) * BigInt(detail::sum_of(l));
  if (BigInt(t) <= fixed + 1)
    throw std::invalid_argument("wrvar: nu_general needs t > r*sum(l) + 1");
  return BigInt(r) * detail::leading_layers(p, k, l) +
         (BigInt(t) - fixed - 1) * (detail::big_pow(p, k - d) - 1) +
         detail::passive_term(p, u, k) + 1;
}

/// Upper bound for the class of t-generated groups in var(A_p wr B_{s,p}),
/// B_{s,p} the s-th direct power of a p-group of the given layer shape.
inline BigInt lambda_general_bound(std::uint64_t p, unsigned u, unsigned k, unsigned d,
                                   std::span<const std::uint64_t> l, std::uint64_t s,
                                   std::uint64_t t)
{
  detail::require_prime(p);
  detail::check_shape(k, d, l);
  if (u < 1)
    throw std::invalid_argument("wrvar: lambda_general_bound needs u >= 1");
  BigInt fixed = BigInt(s) * BigInt(detail::sum_of(l));
  if (BigInt(t) <= fixed)
    throw std::invalid_argument("wrvar: lambda_general_bound needs t > s*sum(l)");
  return BigInt(s) * detail::leading_layers(p, k, l) +
         (BigInt(t) - fixed) * (detail::big_pow(p, k - d) - 1) +
         detail::passive_term(p, u, k) + 1;
}

/// nu_general(.., s+1, t) - lambda_general_bound(.., s, t); independent of s, t and u.
inline BigInt separation_gap(std::uint64_t p, unsigned k, unsigned d,
                             std::span<const std::uint64_t> l)
{
  detail::require_prime(p);
  detail::check_shape(k, d, l);
  if (l.front() == 0)
    throw std::invalid_argument("wrvar: separation_gap needs l_0 >= 1");
  BigInt floor_layer = detail::big_pow(p, k - d);
  BigInt gap = 1 - floor_layer;
  for (std::size_t i = 0; i < l.size(); ++i)
    gap += BigInt(l[i]) * (detail::big_pow(p, k - static_cast<unsigned>(i)) - floor_layer);
  return gap;
}

} // namespace wrvar
