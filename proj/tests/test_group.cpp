#include "leibniz/group.hpp"

#include "leibniz/errors.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace leibniz;

TEST_CASE("group construction") {
  FgAbelianGroup g({4, 2});
  CHECK(g.rank() == 0);
  CHECK(g.order() == Cardinal::of(8));

  FgAbelianGroup trivial{std::vector<Int>{}};
  CHECK(trivial.order() == Cardinal::of(1));

  FgAbelianGroup mixed({0, 6});
  CHECK(mixed.rank() == 1);
  CHECK_FALSE(mixed.order().finite);

  CHECK_THROWS_AS(FgAbelianGroup({1, 2}), Error);
  CHECK_THROWS_AS(FgAbelianGroup({-3}), Error);
}

TEST_CASE("normalization") {
  FgAbelianGroup g({4, 2});
  CHECK(g.normalize({5, 3}).c == Vec{1, 1});

  FgAbelianGroup h({0, 4});
  CHECK(h.normalize({-7, 9}).c == Vec{-7, 1});

  FgAbelianGroup z3({3});
  CHECK(z3.normalize({3}).c == Vec{0});

  CHECK_THROWS_AS(g.normalize({1}), Error);
}

TEST_CASE("element orders") {
  FgAbelianGroup g({4, 2});
  CHECK(g.element_order(g.normalize({2, 1})) == Cardinal::of(2));
  CHECK(g.element_order(g.zero()) == Cardinal::of(1));

  FgAbelianGroup h({0, 4});
  CHECK_FALSE(h.element_order(h.normalize({3, 2})).finite);
  CHECK(h.element_order(h.normalize({0, 2})) == Cardinal::of(2));

  FgAbelianGroup z9({9});
  CHECK(z9.element_order(z9.normalize({3})) == Cardinal::of(3));
}

TEST_CASE("element enumeration is lexicographic") {
  FgAbelianGroup g({2, 2});
  auto all = g.enumerate_elements();
  REQUIRE(all.size() == 4);
  CHECK(all[0].c == Vec{0, 0});
  CHECK(all[1].c == Vec{0, 1});
  CHECK(all[2].c == Vec{1, 0});
  CHECK(all[3].c == Vec{1, 1});

  FgAbelianGroup z3({3});
  auto three = z3.enumerate_elements();
  REQUIRE(three.size() == 3);
  CHECK(three[2].c == Vec{2});

  FgAbelianGroup g42({4, 2});
  auto eight = g42.enumerate_elements();
  REQUIRE(eight.size() == 8);
  CHECK(eight.front().c == Vec{0, 0});
  CHECK(eight.back().c == Vec{3, 1});

  FgAbelianGroup inf({0});
  CHECK_THROWS_AS(inf.enumerate_elements(), Error);
}

TEST_CASE("canonical shapes identify isomorphic presentations") {
  CHECK(FgAbelianGroup({2, 3}).canonical_shape() == FgAbelianGroup({6}).canonical_shape());
  CHECK(FgAbelianGroup({4, 2}).canonical_shape() == FgAbelianGroup({2, 4}).canonical_shape());
  CHECK_FALSE(FgAbelianGroup({4, 2}).canonical_shape() == FgAbelianGroup({8}).canonical_shape());
  CHECK_FALSE(FgAbelianGroup({2, 2}).canonical_shape() == FgAbelianGroup({4}).canonical_shape());
  auto shape = FgAbelianGroup({0, 6}).canonical_shape();
  CHECK(shape.rank == 1);
  CHECK(shape.torsion == std::vector<Int>{6});
}

TEST_CASE("prime support") {
  CHECK(prime_support(FgAbelianGroup({12, 0})) == std::vector<Int>{2, 3});
  CHECK(prime_support(FgAbelianGroup({0})).empty());
  CHECK(prime_support(FgAbelianGroup({49})) == std::vector<Int>{7});
}

TEST_CASE("group arithmetic round trips") {
  FgAbelianGroup g({4, 2});
  for (const auto& x : g.enumerate_elements())
    for (const auto& y : g.enumerate_elements()) {
      CHECK(g.sub(g.add(x, y), y) == x);
      CHECK(g.add(x, g.neg(x)).is_zero());
      CHECK(g.smul(3, x) == g.add(x, g.add(x, x)));
    }
}
