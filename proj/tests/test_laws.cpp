#include <catch_amalgamated.hpp>

#include "wrvar/oracle/finite_abelian.hpp"
#include "wrvar/oracle/laws.hpp"
#include "wrvar/oracle/word.hpp"
#include "wrvar/oracle/wreath.hpp"

using namespace wrvar::oracle;

namespace {

const Word x1 = Word::var(1);
const Word x2 = Word::var(2);

} // namespace

TEST_CASE("word letters and free reduction", "[word]")
{
  Word w = x1 * x1.inverse();
  CHECK(w.letters() == std::vector<Letter>{{1, 1}, {1, -1}});
  CHECK(w.reduced().letters().empty());

  Word c = Word::commutator(x1, x2);
  CHECK(c.letters() == std::vector<Letter>{{1, -1}, {2, -1}, {1, 1}, {2, 1}});
  CHECK(c.inverse().letters() == std::vector<Letter>{{2, -1}, {1, -1}, {2, 1}, {1, 1}});
  CHECK((x1.pow(3) * x1.pow(-1)).reduced().letters() == std::vector<Letter>{{1, 2}});
  CHECK(metabelian_law().variables() == std::set<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(Word::var(0), std::invalid_argument);
  CHECK(c.to_string() == "[x1,x2]");
}

TEST_CASE("eval_word", "[word]")
{
  WreathProduct d8{FiniteAbelianGroup({2}), FiniteAbelianGroup({2})};
  auto gens = d8.generators(); // top generator, then base generator
  Assignment<WreathProduct> a{{1, gens[0]}, {2, gens[1]}};
  CHECK(eval_word(x1 * x1.inverse(), d8, a) == d8.identity());
  CHECK_FALSE(eval_word(Word::commutator(x1, x2), d8, a) == d8.identity());

  FiniteAbelianGroup ab({4, 6});
  Assignment<FiniteAbelianGroup> b{{1, {1, 2}}, {2, {3, 5}}};
  CHECK(eval_word(Word::commutator(x1, x2), ab, b) == ab.identity());

  CHECK_THROWS_AS(eval_word(x2, ab, Assignment<FiniteAbelianGroup>{{1, {0, 0}}}), std::invalid_argument);
}

TEST_CASE("holds_identity", "[laws]")
{
  WreathProduct d8{FiniteAbelianGroup({2}), FiniteAbelianGroup({2})};
  auto meta = holds_identity(d8, metabelian_law());
  CHECK(meta.holds());

  auto comm = holds_identity(d8, Word::commutator(x1, x2));
  REQUIRE_FALSE(comm.holds());
  CHECK_FALSE(eval_word(Word::commutator(x1, x2), d8, *comm.counterexample) == d8.identity());

  CHECK(holds_identity(d8, x1.pow(4)).holds());
  CHECK_FALSE(holds_identity(d8, x1.pow(2)).holds());

  FiniteAbelianGroup c6({6});
  CHECK(holds_identity(c6, x1.pow(6)).holds());
}

TEST_CASE("exhaustive law checking over shared variables falls back to enumeration", "[laws]")
{
  WreathProduct d8{FiniteAbelianGroup({2}), FiniteAbelianGroup({2})};
  // [x1, x1 x2] shares x1 between operands
  Word w = Word::commutator(x1, x1 * x2);
  auto r = holds_identity(d8, w);
  REQUIRE_FALSE(r.holds());
  CHECK_FALSE(eval_word(w, d8, *r.counterexample) == d8.identity());
  CHECK(r.evaluations >= 64);
  // the metabelian law needs no 8^4 enumeration
  CHECK(holds_identity(d8, metabelian_law()).evaluations < 8 * 8 * 8 * 8);
}

TEST_CASE("exhaustive budget", "[laws]")
{
  WreathProduct w{FiniteAbelianGroup({2}), FiniteAbelianGroup({2, 2})};
  Word shared = Word::commutator(x1, x1 * x2) * Word::commutator(x2, Word::var(3) * x1);
  CHECK_THROWS_AS(holds_identity(w, shared, Exhaustive{1000}), budget_exceeded);
}

TEST_CASE("sampled law checking", "[laws]")
{
  WreathProduct d8{FiniteAbelianGroup({2}), FiniteAbelianGroup({2})};
  auto r1 = holds_identity(d8, Word::commutator(x1, x2), Sampled{200, 7});
  auto r2 = holds_identity(d8, Word::commutator(x1, x2), Sampled{200, 7});
  REQUIRE_FALSE(r1.holds());
  CHECK(r1.counterexample == r2.counterexample);
  CHECK(holds_identity(d8, metabelian_law(), Sampled{300, 1}).holds());
}

TEST_CASE("discriminate", "[laws]")
{
  FiniteAbelianGroup c6({6});
  auto a = discriminate(c6, {x1.pow(2), x1.pow(3)});
  REQUIRE(a);
  auto x = a->at(1)[0];
  CHECK((x == 1 || x == 5));

  FiniteAbelianGroup c2({2});
  CHECK_FALSE(discriminate(c2, {x1.pow(2)}));
  auto inv = discriminate(c2, {x1, x1.inverse()});
  REQUIRE(inv);
  CHECK(inv->at(1) == FiniteAbelianGroup::element_type{1});

  // no simultaneous falsification when one word is a law
  CHECK_FALSE(discriminate(c6, {x1.pow(2), x1.pow(6)}));
  CHECK_THROWS_AS(discriminate(c6, {metabelian_law()}, wrvar::oracle::Budget{1 << 20, 100}),
                  budget_exceeded);
}
