/**
 * @file enumerate.hpp
 * @brief Enumeration of integer partitions and of all finite abelian groups
 *        of a given order.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wrvar/abelian_descriptor.hpp"

namespace wrvar {

/// Partitions of n as non-increasing lists of positive parts; {} for n = 0.
inline std::vector<std::vector<unsigned>> partitions(unsigned n)
{
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = std::min(left, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Every abelian group of order n up to isomorphism, one descriptor each.
inline std::vector<AbelianDescriptor> abelian_groups_of_order(std::uint64_t n)
{
  std::vector<AbelianDescriptor::SummandMap> acc(1);
  for (auto [p, a] : factorize(n)) {
    std::vector<AbelianDescriptor::SummandMap> next;
    for (const auto &part : partitions(a)) {
      for (auto m : acc) {
        for (unsigned k : part)
          m[PrimePower{p, k}] += 1;
        next.push_back(std::move(m));
      }
    }
    acc = std::move(next);
  }
  std::vector<AbelianDescriptor> out;
  for (auto &m : acc)
    out.emplace_back(std::move(m));
  return out;
}

} // namespace wrvar
