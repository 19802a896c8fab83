/**
 * @file word.hpp
 * @brief Free-group words over x_1, x_2, ... with commutator notation, and
 *        their evaluation in a finite group.
 *
 * A word keeps the expression tree it was built from (products, inverses,
 * powers, commutators). The tree is what lets law checking split a word into
 * subwords over disjoint variables; `letters()` gives the flat free-group form.
 */
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wrvar/oracle/group.hpp"

namespace wrvar::oracle {

/// x_var^exp
struct Letter {
  int var = 1;
  std::int64_t exp = 1;

  friend bool operator==(const Letter &, const Letter &) = default;
};

class Word {
public:
  struct Product;
  struct Inverse;
  struct Power;
  struct Commutator;
  using Node = std::variant<Letter, Product, Inverse, Power, Commutator>;

  /// The empty word.
  Word();

  static Word var(int i, std::int64_t exp = 1);
  static Word product(std::vector<Word> factors);

  /// Flat word from a letter sequence; zero exponents are skipped.
  static Word from_letters(const std::vector<Letter> &letters);

  Word inverse() const;
  Word pow(std::int64_t n) const;

  /// [a, b] = a^-1 b^-1 a b
  static Word commutator(const Word &a, const Word &b);

  friend Word operator*(const Word &a, const Word &b) { return product({a, b}); }

  const Node &node() const;

  /// Flattened letters, left to right; exponents of powers are expanded.
  std::vector<Letter> letters() const
  {
    std::vector<Letter> out;
    append_letters(out, false);
    return out;
  }

  /// Free reduction: merge adjacent letters in the same variable, drop zeros.
  Word reduced() const;

  std::set<int> variables() const
  {
    std::set<int> vs;
    collect_variables(vs);
    return vs;
  }

  std::string to_string() const;

private:
  explicit Word(Node n);

  void append_letters(std::vector<Letter> &out, bool inverted) const;
  void collect_variables(std::set<int> &vs) const;

  std::shared_ptr<const Node> node_;
};

struct Word::Product {
  std::vector<Word> factors;
};
struct Word::Inverse {
  Word inner;
};
struct Word::Power {
  Word inner;
  std::int64_t n;
};
struct Word::Commutator {
  Word left, right;
};

inline const Word::Node &Word::node() const { return *node_; }

inline Word::Word(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
inline Word::Word() : Word(Node(Product{})) {}

inline Word Word::var(int i, std::int64_t exp)
{
  if (i < 1)
    throw std::invalid_argument("wrvar: variables are numbered from 1");
  if (exp == 0)
    return Word();
  return Word(Node(Letter{i, exp}));
}

inline Word Word::product(std::vector<Word> factors) { return Word(Node(Product{std::move(factors)})); }

inline Word Word::from_letters(const std::vector<Letter> &letters)
{
  std::vector<Word> fs;
  for (const auto &l : letters)
    if (l.exp != 0)
      fs.push_back(var(l.var, l.exp));
  return product(std::move(fs));
}

inline Word Word::inverse() const { return Word(Node(Inverse{*this})); }
inline Word Word::pow(std::int64_t n) const { return Word(Node(Power{*this, n})); }
inline Word Word::commutator(const Word &a, const Word &b) { return Word(Node(Commutator{a, b})); }

inline Word Word::reduced() const
{
  std::vector<Letter> stack;
  for (const auto &l : letters()) {
    if (!stack.empty() && stack.back().var == l.var) {
      stack.back().exp += l.exp;
      if (stack.back().exp == 0)
        stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return from_letters(stack);
}

inline std::string Word::to_string() const
{
  return std::visit(
      [](const auto &n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Letter>) {
          std::string s = "x" + std::to_string(n.var);
          return n.exp == 1 ? s : s + "^" + std::to_string(n.exp);
        } else if constexpr (std::is_same_v<T, Product>) {
          if (n.factors.empty())
            return "1";
          std::string s;
          for (std::size_t i = 0; i < n.factors.size(); ++i)
            s += (i ? "*" : "") + n.factors[i].to_string();
          return n.factors.size() == 1 ? s : "(" + s + ")";
        } else if constexpr (std::is_same_v<T, Inverse>) {
          return "(" + n.inner.to_string() + ")^-1";
        } else if constexpr (std::is_same_v<T, Power>) {
          return "(" + n.inner.to_string() + ")^" + std::to_string(n.n);
        } else {
          return "[" + n.left.to_string() + "," + n.right.to_string() + "]";
        }
      },
      *node_);
}

inline void Word::append_letters(std::vector<Letter> &out, bool inverted) const
{
  std::visit(
      [&](const auto &n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Letter>) {
          out.push_back({n.var, inverted ? -n.exp : n.exp});
        } else if constexpr (std::is_same_v<T, Product>) {
          if (inverted)
            for (auto it = n.factors.rbegin(); it != n.factors.rend(); ++it)
              it->append_letters(out, true);
          else
            for (const auto &f : n.factors)
              f.append_letters(out, false);
        } else if constexpr (std::is_same_v<T, Inverse>) {
          n.inner.append_letters(out, !inverted);
        } else if constexpr (std::is_same_v<T, Power>) {
          bool inv = inverted != (n.n < 0);
          std::int64_t times = n.n < 0 ? -n.n : n.n;
          for (std::int64_t i = 0; i < times; ++i)
            n.inner.append_letters(out, inv);
        } else {
          // [a,b]^-1 = b^-1 a^-1 b a
          if (!inverted) {
            n.left.append_letters(out, true);
            n.right.append_letters(out, true);
            n.left.append_letters(out, false);
            n.right.append_letters(out, false);
          } else {
            n.right.append_letters(out, true);
            n.left.append_letters(out, true);
            n.right.append_letters(out, false);
            n.left.append_letters(out, false);
          }
        }
      },
      *node_);
}

inline void Word::collect_variables(std::set<int> &vs) const
{
  std::visit(
      [&](const auto &n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Letter>)
          vs.insert(n.var);
        else if constexpr (std::is_same_v<T, Product>)
          for (const auto &f : n.factors)
            f.collect_variables(vs);
        else if constexpr (std::is_same_v<T, Inverse> || std::is_same_v<T, Power>)
          n.inner.collect_variables(vs);
        else {
          n.left.collect_variables(vs);
          n.right.collect_variables(vs);
        }
      },
      *node_);
}

/// The metabelian law [[x1,x2],[x3,x4]].
inline Word metabelian_law()
{
  return Word::commutator(Word::commutator(Word::var(1), Word::var(2)),
                          Word::commutator(Word::var(3), Word::var(4)));
}

template <FiniteGroup G>
using Assignment = std::map<int, Element<G>>;

/// Evaluates `w` under `assignment`, following the expression tree.
template <FiniteGroup G>
Element<G> eval_word(const Word &w, const G &g, const Assignment<G> &assignment)
{
  return std::visit(
      [&](const auto &n) -> Element<G> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Letter>) {
          auto it = assignment.find(n.var);
          if (it == assignment.end())
            throw std::invalid_argument("wrvar: unassigned variable x" + std::to_string(n.var));
          return power(g, it->second, n.exp);
        } else if constexpr (std::is_same_v<T, Word::Product>) {
          Element<G> r = g.identity();
          for (const auto &f : n.factors)
            r = g.multiply(r, eval_word(f, g, assignment));
          return r;
        } else if constexpr (std::is_same_v<T, Word::Inverse>) {
          return g.inverse(eval_word(n.inner, g, assignment));
        } else if constexpr (std::is_same_v<T, Word::Power>) {
          return power(g, eval_word(n.inner, g, assignment), n.n);
        } else {
          return commutator(g, eval_word(n.left, g, assignment), eval_word(n.right, g, assignment));
        }
      },
      w.node());
}

/// Evaluates the flat letter sequence of `w`; must agree with eval_word.
template <FiniteGroup G>
Element<G> eval_letters(const std::vector<Letter> &letters, const G &g, const Assignment<G> &assignment)
{
  Element<G> r = g.identity();
  for (const auto &l : letters) {
    auto it = assignment.find(l.var);
    if (it == assignment.end())
      throw std::invalid_argument("wrvar: unassigned variable x" + std::to_string(l.var));
    r = g.multiply(r, power(g, it->second, l.exp));
  }
  return r;
}

} // namespace wrvar::oracle
