/**
 * @file criterion.hpp
 * @brief Decides whether A Wr B generates var(A).var(B) for abelian A, B, and
 *        analyses the chain var(A Wr B^s), s = 1, 2, ... when it does not.
 *
 * The decision reads only exponents and the top layers B[p^k]/B[p^{k-1}] of
 * the active group B. When either exponent is infinite the product variety
 * is always generated. Otherwise every prime p dividing both exponents must
 * have infinitely many cycles of the top order p^k in B.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wrvar/abelian_descriptor.hpp"
#include "wrvar/nilpotency.hpp"

namespace wrvar {

enum class CaseTag { NonFiniteExponent, FiniteCoprime, FiniteAllLayersInfinite, Blocked };

inline const char *to_string(CaseTag tag)
{
  switch (tag) {
  case CaseTag::NonFiniteExponent: return "NON_FINITE_EXPONENT";
  case CaseTag::FiniteCoprime: return "FINITE_COPRIME";
  case CaseTag::FiniteAllLayersInfinite: return "FINITE_ALL_LAYERS_INFINITE";
  case CaseTag::Blocked: return "BLOCKED";
  }
  return "?";
}

/// A prime at which the top layer of B is finite.
struct Witness {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t layer_rank = 0;

  friend bool operator==(const Witness &, const Witness &) = default;
};

struct Verdict {
  bool generates = false;
  CaseTag case_tag = CaseTag::Blocked;
  std::vector<Witness> witnesses; // sorted by prime; empty iff generates
};

inline Verdict generates(const AbelianDescriptor &a, const AbelianDescriptor &b)
{
  if (!a.has_finite_exponent() || !b.has_finite_exponent())
    return {true, CaseTag::NonFiniteExponent, {}};

  auto pa = a.primes();
  std::vector<std::uint64_t> common;
  for (auto p : b.primes()) {
    if (pa.count(p))
      common.push_back(p);
  }
  if (common.empty())
    return {true, CaseTag::FiniteCoprime, {}};

  Verdict v{true, CaseTag::FiniteAllLayersInfinite, {}};
  for (auto p : common) {
    Cardinal mu = top_layer_multiplicity(b, p);
    if (mu.is_finite())
      v.witnesses.push_back({p, k_of(b, p), mu.value()});
  }
  if (!v.witnesses.empty()) {
    v.generates = false;
    v.case_tag = CaseTag::Blocked;
  }
  return v;
}

/// Finite (or finitely generated torsion) case: the product variety is
/// generated iff the exponents are coprime.
inline bool generates_finite(std::uint64_t m, std::uint64_t n)
{
  if (m < 1 || n < 1)
    throw std::invalid_argument("wrvar: exponents must be >= 1");
  return std::gcd(m, n) == 1;
}

/// Which structural situation the pair falls into.
enum class Route {
  InfiniteExponent, ///< one of the groups is not of finite exponent
  FiniteGroups,     ///< both groups finite: coprime exponents decide
  PGroups,          ///< both p-groups for one prime: top layer of B decides
  CompositeExponent ///< finite exponents, several primes: every common prime decides
};

inline const char *to_string(Route r)
{
  switch (r) {
  case Route::InfiniteExponent: return "infinite exponent";
  case Route::FiniteGroups: return "finite groups";
  case Route::PGroups: return "p-groups";
  case Route::CompositeExponent: return "composite exponents";
  }
  return "?";
}

struct Classification {
  CaseTag case_tag;
  Route route;
  std::string explanation;
};

inline Classification classify(const AbelianDescriptor &a, const AbelianDescriptor &b)
{
  Verdict v = generates(a, b);
  if (v.case_tag == CaseTag::NonFiniteExponent)
    return {v.case_tag, Route::InfiniteExponent,
            "one group is not of finite exponent, so the product variety is always generated"};
  if (a.is_finite_group() && b.is_finite_group())
    return {v.case_tag, Route::FiniteGroups,
            "both groups are finite: generated iff the exponents are coprime"};
  auto pa = a.primes();
  auto pb = b.primes();
  if (pa.size() == 1 && pb.size() == 1 && pa == pb)
    return {v.case_tag, Route::PGroups,
            "p-groups of finite exponent: generated iff B has infinitely many cycles of order p^k"};
  return {v.case_tag, Route::CompositeExponent,
          "finite composite exponents: every prime dividing both exponents needs an infinite "
          "top layer in B"};
}

/// The primary component at p is a finite group.
struct FiniteComponent {
  friend bool operator==(const FiniteComponent &, const FiniteComponent &) = default;
};

/// B_p = l_0 C_{p^k} + ... + l_{d-1} C_{p^{k-d+1}} + (infinitely many C_{p^{k-d}}) + lower terms.
struct LayerShape {
  unsigned k = 0;
  unsigned d = 0;
  std::vector<std::uint64_t> l;

  friend bool operator==(const LayerShape &, const LayerShape &) = default;
};

using SeparationParameters = std::variant<FiniteComponent, LayerShape>;

inline SeparationParameters separating_parameters(const AbelianDescriptor &b, std::uint64_t p)
{
  unsigned k = k_of(b, p);
  if (k == 0)
    throw std::domain_error("p does not divide exponent");
  if (b.multiplicity(p, k).is_inf())
    throw std::domain_error("wrvar: top layer is infinite, no separation exists");
  if (primary_component(b, p).is_finite_group())
    return FiniteComponent{};
  LayerShape shape{k, 0, {}};
  for (unsigned i = 0; i < k; ++i) {
    Cardinal mult = b.multiplicity(p, k - i);
    if (mult.is_inf()) {
      shape.d = i;
      return shape;
    }
    shape.l.push_back(mult.value());
  }
  throw std::logic_error("wrvar: infinite primary component without an infinite layer");
}

enum class Alternative { Collapses, StrictChain };

inline const char *to_string(Alternative a)
{
  return a == Alternative::Collapses ? "COLLAPSES" : "STRICT_CHAIN";
}

enum class CertificateKind {
  None,
  LayerGap,       ///< the class of a t-generated group exceeds the class bound at s
  ClassDifference ///< finite primary components: the wreath products differ in class
};

inline const char *to_string(CertificateKind c)
{
  switch (c) {
  case CertificateKind::None: return "none";
  case CertificateKind::LayerGap: return "layer_gap";
  case CertificateKind::ClassDifference: return "class_difference";
  }
  return "?";
}

/// Evidence that var(A Wr B^s) is strictly smaller than var(A Wr B^{s+1}).
struct ChainStep {
  std::uint64_t s = 0;
  std::uint64_t witness_t = 0; ///< generator count of the separating group
  BigInt separating_class;     ///< class of the t-generated group available at s+1
  BigInt bound;                ///< class bound for t-generated groups at s
  BigInt gap;                  ///< separating_class - bound, always > 0
};

struct ChainReport {
  Alternative alternative = Alternative::Collapses;
  std::map<std::uint64_t, SeparationParameters> per_prime;
  CertificateKind certificate = CertificateKind::None;
  std::uint64_t certificate_prime = 0;
  std::vector<ChainStep> steps;
};

inline ChainReport chain_analysis(const AbelianDescriptor &a, const AbelianDescriptor &b,
                                  std::uint64_t s_max)
{
  if (s_max < 1)
    throw std::invalid_argument("wrvar: s_max must be >= 1");
  ChainReport report;
  Verdict v = generates(a, b);
  if (v.generates)
    return report;

  report.alternative = Alternative::StrictChain;
  for (const auto &w : v.witnesses)
    report.per_prime.emplace(w.p, separating_parameters(b, w.p));

  // Smallest blocking prime with an infinite primary component, else the smallest one.
  auto layered = std::find_if(report.per_prime.begin(), report.per_prime.end(),
                              [](const auto &e) { return std::holds_alternative<LayerShape>(e.second); });
  if (layered != report.per_prime.end()) {
    const std::uint64_t p = layered->first;
    const auto &shape = std::get<LayerShape>(layered->second);
    const unsigned u = k_of(a, p);
    const std::uint64_t layers = std::accumulate(shape.l.begin(), shape.l.end(), std::uint64_t{0});
    report.certificate = CertificateKind::LayerGap;
    report.certificate_prime = p;
    BigInt gap = separation_gap(p, shape.k, shape.d, shape.l);
    for (std::uint64_t s = 1; s <= s_max; ++s) {
      std::uint64_t t = detail::checked_add(detail::checked_mul(s + 1, layers), 2);
      ChainStep step{s, t, nu_general(p, u, shape.k, shape.d, shape.l, s + 1, t),
                     lambda_general_bound(p, u, shape.k, shape.d, shape.l, s, t), 0};
      step.gap = step.separating_class - step.bound;
      if (step.gap != gap)
        throw std::logic_error("wrvar: separation gap disagrees with its closed form");
      report.steps.push_back(std::move(step));
    }
    return report;
  }

  const std::uint64_t p = report.per_prime.begin()->first;
  const unsigned u = k_of(a, p);
  const AbelianDescriptor bp = primary_component(b, p);
  auto rank = [p](const AbelianDescriptor &d) {
    std::uint64_t r = 0;
    for (const auto &[key, mult] : d.summands())
      if (key.p == p)
        r = detail::checked_add(r, mult.value());
    return r;
  };
  auto class_at = [&](std::uint64_t s) {
    AbelianDescriptor power = direct_power(bp, s);
    auto ks = summand_exponents(power, p, rank(power));
    return liebeck_class(p, u, ks);
  };
  report.certificate = CertificateKind::ClassDifference;
  report.certificate_prime = p;
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    std::uint64_t t = detail::checked_add(1, detail::checked_mul(s + 1, rank(bp)));
    ChainStep step{s, t, class_at(s + 1), class_at(s), 0};
    step.gap = step.separating_class - step.bound;
    report.steps.push_back(std::move(step));
  }
  return report;
}

} // namespace wrvar
