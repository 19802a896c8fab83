#include <catch_amalgamated.hpp>

#include "wrvar/enumerate.hpp"
#include "wrvar/oracle/finite_abelian.hpp"
#include "wrvar/oracle/group.hpp"
#include "wrvar/oracle/wreath.hpp"

using namespace wrvar;
using namespace wrvar::oracle;

TEST_CASE("wreath product orders", "[oracle]")
{
  CHECK(all_elements(build_wreath(FiniteAbelianGroup({2}), FiniteAbelianGroup({2}))).size() == 8);
  CHECK(build_wreath(FiniteAbelianGroup({3}), FiniteAbelianGroup({3})).order() == 81);
  auto w = build_wreath(FiniteAbelianGroup({2}), FiniteAbelianGroup({2, 2}));
  CHECK(w.order() == 64);
  CHECK(all_elements(w).size() == 64);
  CHECK(w.generators().size() == 3);
}

TEST_CASE("wreath budget is enforced with the computed size", "[oracle]")
{
  try {
    build_wreath(FiniteAbelianGroup({2}), FiniteAbelianGroup({2, 2, 2, 2}), 1 << 16);
    FAIL("expected budget_exceeded");
  } catch (const budget_exceeded &e) {
    CHECK(e.required() == BigInt(1 << 16) * 16);
    CHECK(e.limit() == 1 << 16);
  }
  CHECK_THROWS_AS(build_wreath(FiniteAbelianGroup({2}), FiniteAbelianGroup({101})), budget_exceeded);
}

TEST_CASE("multiplication follows the translation action", "[oracle]")
{
  WreathProduct w{FiniteAbelianGroup({5}), FiniteAbelianGroup({3})};
  // (1, f)(0, delta_0): base g -> f(g) + delta_0(g - 1), so the new mass sits at g = 1
  auto x = w.make({1}, {{0}, {0}, {0}});
  auto y = w.make({0}, {{2}, {0}, {0}});
  auto xy = w.multiply(x, y);
  CHECK(xy == w.make({1}, {{0}, {2}, {0}}));
  CHECK(w.multiply(x, w.inverse(x)) == w.identity());
  CHECK(w.multiply(xy, w.inverse(xy)) == w.identity());
}

TEST_CASE("generated_subgroup", "[oracle]")
{
  WreathProduct w{FiniteAbelianGroup({2}), FiniteAbelianGroup({2})};
  CHECK(generated_subgroup(w, {w.identity()}, 100).size() == 1);
  CHECK(generated_subgroup(w, w.generators(), 100).size() == 8);
  CHECK(generated_subgroup(w, {w.generators().back()}, 100).size() == 2);
  CHECK_THROWS_AS(generated_subgroup(w, w.generators(), 5), budget_exceeded);
  CHECK_THROWS_AS(generated_subgroup(w, w.generators(), 0), std::invalid_argument);
}

TEST_CASE("lower central series", "[oracle]")
{
  WreathProduct d8{FiniteAbelianGroup({2}), FiniteAbelianGroup({2})};
  auto lcs = nilpotency_class(d8, d8.generators());
  CHECK(lcs.nilpotency_class == 2);
  CHECK(lcs.orders == std::vector<std::uint64_t>{8, 2, 1});

  FiniteAbelianGroup ab({4, 6});
  CHECK(nilpotency_class(ab, ab.generators()).nilpotency_class == 1);
  CHECK(nilpotency_class(ab, {ab.identity()}).nilpotency_class == 0);

  WreathProduct w{FiniteAbelianGroup({2}), FiniteAbelianGroup({2, 2})};
  CHECK(nilpotency_class(w, w.generators()).nilpotency_class == 3);
}

TEST_CASE("non-nilpotent groups are detected", "[oracle]")
{
  // C3 wr C2 has a non-trivial perfect-commutator tail: [C3^2, C2] = antidiagonal, stable
  WreathProduct w{FiniteAbelianGroup({3}), FiniteAbelianGroup({2})};
  CHECK_THROWS_AS(nilpotency_class(w, w.generators()), std::runtime_error);
}

TEST_CASE("generator-commutator series agrees with the full commutator series", "[oracle]")
{
  // all p-group wreath products A wr B with A, B non-trivial and order <= 128
  std::size_t checked = 0;
  for (std::uint64_t nb : {2, 4, 8}) {
    for (std::uint64_t na : {2, 4, 8, 16, 32}) {
      BigInt order = boost::multiprecision::pow(BigInt(na), static_cast<unsigned>(nb)) * nb;
      if (order > 128)
        continue;
      for (const auto &ad : abelian_groups_of_order(na))
        for (const auto &bd : abelian_groups_of_order(nb)) {
          WreathProduct w{FiniteAbelianGroup::from_descriptor(ad), FiniteAbelianGroup::from_descriptor(bd)};
          auto fast = nilpotency_class(w, w.generators());
          auto full = nilpotency_class_full(w, w.generators());
          CHECK(fast.orders == full.orders);
          ++checked;
        }
    }
  }
  WreathProduct c3{FiniteAbelianGroup({3}), FiniteAbelianGroup({3})};
  CHECK(nilpotency_class(c3, c3.generators()).orders == nilpotency_class_full(c3, c3.generators()).orders);
  CHECK(checked >= 6);
}

TEST_CASE("max_class_t_generated", "[oracle]")
{
  WreathProduct d8{FiniteAbelianGroup({2}), FiniteAbelianGroup({2})};
  CHECK(max_class_t_generated(d8, 1) == 1);
  CHECK(max_class_t_generated(d8, 2) == 2);
  CHECK(max_class_t_generated(d8, 3) == 2);

  FiniteAbelianGroup ab({2, 3});
  CHECK(max_class_t_generated(ab, 2) == 1);

  WreathProduct w{FiniteAbelianGroup({2}), FiniteAbelianGroup({2, 2})};
  CHECK(max_class_t_generated(w, 3) == 3);
  CHECK_THROWS_AS(max_class_t_generated(w, 3, Budget{1 << 24, 1000}), budget_exceeded);
}

TEST_CASE("abelian group enumeration", "[oracle]")
{
  CHECK(abelian_groups_of_order(1).size() == 1);
  CHECK(abelian_groups_of_order(8).size() == 3);
  CHECK(abelian_groups_of_order(16).size() == 5);
  CHECK(abelian_groups_of_order(72).size() == 6);
  for (std::uint64_t n = 1; n <= 64; ++n)
    for (const auto &d : abelian_groups_of_order(n))
      CHECK(finite_order(d) == n);
}
