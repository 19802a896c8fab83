/**
 * @file descriptor_text.hpp
 * @brief Text form of abelian group descriptors.
 *
 *   descriptor := term ("+" term)* | "0"
 *   term       := "Z" ["^" mult] | "C" int ["^" mult] | "U" prime
 *   mult       := positive-int | "inf"
 *
 * Whitespace is ignored everywhere. "C1" is accepted and contributes
 * nothing; "C0" is an error.
 */
#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wrvar/abelian_descriptor.hpp"

namespace wrvar {

class parse_error : public std::invalid_argument {
public:
  parse_error(const std::string &msg, std::size_t pos)
      : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg),
        pos_(pos)
  {}

  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

namespace detail {

class DescriptorParser {
public:
  explicit DescriptorParser(std::string_view s) : s_(s) {}

  AbelianDescriptor parse()
  {
    skip();
    if (peek() == '0') {
      ++pos_;
      skip();
      if (pos_ != s_.size())
        throw parse_error("unexpected input after '0'", pos_);
      return {};
    }
    for (;;) {
      term();
      skip();
      if (pos_ == s_.size())
        break;
      expect('+');
    }
    return AbelianDescriptor::canonicalize(terms_, free_rank_, unbounded_);
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  void expect(char c)
  {
    skip();
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::uint64_t integer()
  {
    skip();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        throw parse_error("integer too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start)
      throw parse_error("expected an integer", start);
    return v;
  }

  Cardinal multiplicity()
  {
    skip();
    if (peek() != '^')
      return 1;
    ++pos_;
    skip();
    if (s_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      return Cardinal::inf();
    }
    std::size_t at = pos_;
    std::uint64_t m = integer();
    if (m == 0)
      throw parse_error("multiplicity must be positive", at);
    return m;
  }

  void term()
  {
    skip();
    std::size_t at = pos_;
    switch (peek()) {
    case 'Z':
      ++pos_;
      free_rank_ += multiplicity();
      break;
    case 'C': {
      ++pos_;
      skip();
      std::size_t n_at = pos_;
      std::uint64_t n = integer();
      if (n == 0)
        throw parse_error("cyclic order must be >= 1", n_at);
      terms_.push_back({n, multiplicity()});
      break;
    }
    case 'U': {
      ++pos_;
      skip();
      std::size_t p_at = pos_;
      std::uint64_t p = integer();
      if (!is_prime(p))
        throw parse_error("U needs a prime", p_at);
      unbounded_.insert(p);
      break;
    }
    default:
      throw parse_error("expected 'Z', 'C' or 'U'", at);
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<CyclicTerm> terms_;
  Cardinal free_rank_ = 0;
  std::set<std::uint64_t> unbounded_;
};

inline std::string with_mult(std::string base, const Cardinal &c)
{
  return c == Cardinal(1) ? base : base + "^" + c.to_string();
}

} // namespace detail

inline AbelianDescriptor parse_descriptor(std::string_view text)
{
  return detail::DescriptorParser(text).parse();
}

/// Canonical text: free part, then cycles by prime and decreasing order, then U terms.
inline std::string render_descriptor(const AbelianDescriptor &d)
{
  if (d.is_trivial())
    return "0";
  std::vector<std::string> parts;
  if (!d.free_rank().is_zero())
    parts.push_back(detail::with_mult("Z", d.free_rank()));
  std::uint64_t last_p = 0;
  std::vector<std::string> block;
  auto flush = [&] {
    parts.insert(parts.end(), block.rbegin(), block.rend());
    block.clear();
  };
  for (const auto &[key, mult] : d.summands()) {
    if (key.p != last_p)
      flush();
    last_p = key.p;
    block.push_back(detail::with_mult("C" + std::to_string(detail::checked_pow(key.p, key.k)), mult));
  }
  flush();
  for (auto p : d.unbounded_primes())
    parts.push_back("U" + std::to_string(p));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? " + " : "") + parts[i];
  return out;
}

} // namespace wrvar
