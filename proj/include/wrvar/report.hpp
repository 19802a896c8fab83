/**
 * @file report.hpp
 * @brief JSON and plain-text renderings of verdicts and chain reports.
 *
 * JSON objects use nlohmann::json's default (sorted) key order, so output is
 * byte-stable across runs.
 */
#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

#include "wrvar/criterion.hpp"
#include "wrvar/descriptor_text.hpp"

namespace wrvar {

namespace detail {

inline nlohmann::json ext_json(const ExtNat &e)
{
  return e.is_inf() ? nlohmann::json("inf") : nlohmann::json(e.value());
}

// Exact integers as JSON numbers while they fit, as decimal strings beyond.
inline nlohmann::json big_json(const BigInt &v)
{
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline std::string pow_text(std::uint64_t p, unsigned k)
{
  return BigInt(boost::multiprecision::pow(BigInt(p), k)).str();
}

} // namespace detail

inline nlohmann::json verdict_json(const AbelianDescriptor &a, const AbelianDescriptor &b,
                                   const Verdict &v)
{
  nlohmann::json j;
  j["generates"] = v.generates;
  j["case"] = to_string(v.case_tag);
  j["witnesses"] = nlohmann::json::array();
  for (const auto &w : v.witnesses)
    j["witnesses"].push_back({{"p", w.p}, {"k", w.k}, {"layer_rank", w.layer_rank}});
  j["exponents"] = {{"A", detail::ext_json(exponent(a))}, {"B", detail::ext_json(exponent(b))}};
  j["passive"] = render_descriptor(a);
  j["active"] = render_descriptor(b);
  return j;
}

inline std::string verdict_text(const AbelianDescriptor &a, const AbelianDescriptor &b,
                                const Verdict &v)
{
  std::ostringstream os;
  os << "A (passive) = " << render_descriptor(a) << "\n"
     << "B (active)  = " << render_descriptor(b) << "\n"
     << "exp A = " << exponent(a) << ", exp B = " << exponent(b) << "\n"
     << "A Wr B " << (v.generates ? "generates" : "does NOT generate") << " var(A).var(B)\n";
  switch (v.case_tag) {
  case CaseTag::NonFiniteExponent:
    os << "Theorem: infinite exponent, one of A and B is not of finite exponent\n";
    break;
  case CaseTag::FiniteCoprime:
    os << "Theorem: main criterion, exponents are coprime\n";
    break;
  case CaseTag::FiniteAllLayersInfinite:
    os << "Theorem: main criterion, every prime dividing both exponents has an infinite top layer:";
    for (auto p : a.primes())
      if (b.primes().count(p)) {
        unsigned k = k_of(b, p);
        os << " |B[" << detail::pow_text(p, k) << "]/B[" << detail::pow_text(p, k - 1)
           << "]| = inf;";
      }
    os << "\n";
    break;
  case CaseTag::Blocked:
    for (const auto &w : v.witnesses)
      os << "Theorem: main criterion, blocking prime " << w.p << ", |B["
         << detail::pow_text(w.p, w.k) << "]/B[" << detail::pow_text(w.p, w.k - 1)
         << "]| = "
         << (w.layer_rank <= 256 ? detail::pow_text(w.p, static_cast<unsigned>(w.layer_rank))
                                 : std::to_string(w.p) + "^" + std::to_string(w.layer_rank))
         << " (finite)\n";
    break;
  }
  return os.str();
}

inline nlohmann::json chain_json(const ChainReport &r)
{
  nlohmann::json j;
  j["alternative"] = to_string(r.alternative);
  j["per_prime"] = nlohmann::json::array();
  for (const auto &[p, params] : r.per_prime) {
    if (std::holds_alternative<FiniteComponent>(params)) {
      j["per_prime"].push_back({{"p", p}, {"finite_component", true}});
    } else {
      const auto &s = std::get<LayerShape>(params);
      j["per_prime"].push_back({{"p", p}, {"finite_component", false}, {"k", s.k}, {"d", s.d}, {"l", s.l}});
    }
  }
  j["certificate"] = {{"kind", to_string(r.certificate)}, {"prime", r.certificate_prime}};
  j["steps"] = nlohmann::json::array();
  for (const auto &st : r.steps)
    j["steps"].push_back({{"s", st.s},
                          {"witness_t", st.witness_t},
                          {"separating_class", detail::big_json(st.separating_class)},
                          {"bound", detail::big_json(st.bound)},
                          {"gap", detail::big_json(st.gap)}});
  return j;
}

inline std::string chain_text(const ChainReport &r)
{
  std::ostringstream os;
  os << "alternative: " << to_string(r.alternative) << "\n";
  if (r.alternative == Alternative::Collapses) {
    os << "A Wr B generates var(A).var(B); every A Wr B^s generates the same variety\n";
    return os.str();
  }
  for (const auto &[p, params] : r.per_prime) {
    os << "prime " << p << ": ";
    if (std::holds_alternative<FiniteComponent>(params)) {
      os << "finite primary component\n";
    } else {
      const auto &s = std::get<LayerShape>(params);
      os << "k = " << s.k << ", d = " << s.d << ", l = [";
      for (std::size_t i = 0; i < s.l.size(); ++i)
        os << (i ? ", " : "") << s.l[i];
      os << "]\n";
    }
  }
  os << "certificate: " << to_string(r.certificate) << " at prime " << r.certificate_prime << "\n";
  for (const auto &st : r.steps) {
    os << "  s = " << st.s << ": t = " << st.witness_t;
    if (r.certificate == CertificateKind::LayerGap)
      os << ", nu = " << st.separating_class << " > lambda bound = " << st.bound;
    else
      os << ", class(s+1) = " << st.separating_class << " > class(s) = " << st.bound;
    os << ", gap " << st.gap << "\n";
  }
  return os.str();
}

} // namespace wrvar
