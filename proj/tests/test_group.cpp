#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "superx/error.hpp"
#include "superx/group.hpp"
#include "superx/oracle/brute_force.hpp"

using namespace superx;

namespace {

  Mask set_of(std::initializer_list<Elem> xs) {
    Mask m = 0;
    for (auto x : xs) {
      m |= singleton(x);
    }
    return m;
  }

}  // namespace

TEST_CASE("build_group parses the catalog grammar", "[group]") {
  CHECK(build_group("C1").order() == 1);
  CHECK(build_group("C16").order() == 16);
  CHECK(build_group("C4xC2").order() == 8);
  CHECK(build_group("C2xC2xC2").order() == 8);
  CHECK(build_group("D12").order() == 12);
  CHECK(build_group("A4").order() == 12);
  CHECK(build_group("C3:C4").order() == 12);

  auto const q8 = build_group("Q8");
  CHECK(q8.order() == 8);
  int involutions = 0;
  for (Elem x = 0; x < 8; ++x) {
    involutions += q8.element_order(x) == 2 ? 1 : 0;
  }
  CHECK(involutions == 1);
}

TEST_CASE("build_group rejects bad names and large orders", "[group]") {
  CHECK_THROWS_AS(build_group("C0"), ParseError);
  CHECK_THROWS_AS(build_group("Z5"), ParseError);
  CHECK_THROWS_AS(build_group("D7"), ParseError);
  CHECK_THROWS_AS(build_group("D3"), ParseError);
  CHECK_THROWS_AS(build_group(""), ParseError);
  CHECK_THROWS_AS(build_group("C17"), CapacityError);
  CHECK_THROWS_AS(build_group("C4xC5"), CapacityError);
  CHECK_THROWS_AS(build_group("D18"), CapacityError);
}

TEST_CASE("FiniteGroup validates its table", "[group]") {
  // Identity not at 0.
  CHECK_THROWS_AS(FiniteGroup("bad", {{1, 0}, {0, 1}}), ConsistencyError);
  // Not associative: a Latin square with identity 0 of order 5 that is not a group.
  std::vector<std::vector<Elem>> loop = {{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup("loop", loop), ConsistencyError);
  CHECK_THROWS_AS(FiniteGroup("big", std::vector<std::vector<Elem>>(
                                          17, std::vector<Elem>(17, 0))),
                  CapacityError);
}

TEST_CASE("cyclic elements are generator powers", "[group]") {
  auto const g = build_group("C6");
  for (Elem x = 0; x < 6; ++x) {
    for (Elem y = 0; y < 6; ++y) {
      CHECK(g.mul(x, y) == (x + y) % 6);
    }
  }
}

TEST_CASE("the semidirect product C3:C4 has a normal subgroup of order 3", "[group]") {
  auto const g = build_group("C3:C4");
  bool       nonabelian = false;
  for (Elem x = 0; x < 12; ++x) {
    for (Elem y = 0; y < 12; ++y) {
      nonabelian = nonabelian || g.mul(x, y) != g.mul(y, x);
    }
  }
  CHECK(nonabelian);
  Mask normal = 0;
  for (Mask h : g.subgroups()) {
    if (cardinality(h) != 3) {
      continue;
    }
    bool is_normal = true;
    for (Elem x = 0; x < 12; ++x) {
      is_normal = is_normal && g.translate(x, h) == g.right_translate(h, x);
    }
    if (is_normal) {
      normal = h;
    }
  }
  CHECK(normal != 0);
}

TEST_CASE("element orders", "[group]") {
  CHECK(build_group("C5").element_order(1) == 5);
  CHECK(build_group("Q8").element_order(1) == 2);  // -1
  auto const d6 = build_group("D6");
  for (Elem s = 3; s < 6; ++s) {
    CHECK(d6.element_order(s) == oracle::element_order(d6, s));
    CHECK(d6.element_order(s) == 2);
  }
}

TEST_CASE("odd groups", "[group]") {
  CHECK(build_group("C5").is_odd());
  CHECK(build_group("C3").is_odd());
  CHECK(build_group("C1").is_odd());
  CHECK_FALSE(build_group("C6").is_odd());
  CHECK_FALSE(build_group("D6").is_odd());
}

TEST_CASE("translations", "[group]") {
  auto const c4 = build_group("C4");
  // i * {1, i} = {i, -1}; i is the generator (index 1), -1 is index 2.
  CHECK(c4.translate(1, set_of({0, 1})) == oracle::translate(c4, 1, set_of({0, 1})));
  CHECK(c4.translate(1, set_of({0, 1})) == set_of({1, 2}));

  auto const c5 = build_group("C5");
  CHECK(c5.translate(1, set_of({0, 2})) == set_of({1, 3}));
  CHECK(c5.translate(0, set_of({2, 4})) == set_of({2, 4}));
  // x^{-1}A = {y : xy in A}
  CHECK(c5.translate_inverse(1, set_of({1, 3})) == set_of({0, 2}));
}

TEST_CASE("difference sets", "[group]") {
  auto const c8 = build_group("C8");
  CHECK(c8.difference_set(0, set_of({1, 2})) == 0);
  Mask const a = set_of({0, 1, 3, 4});
  CHECK(c8.difference_set(a, a) == c8.full());

  auto const cube = build_group("C2xC2xC2");
  // a, b, c = 4, 2, 1; products are xor.
  Mask const s = set_of({0, 4, 2, 1});
  CHECK(cube.difference_set(s, s) == set_of({0, 4, 2, 1, 6, 5, 3}));
  CHECK(cube.difference_set(s, s) != cube.full());
}

TEST_CASE("subgroups", "[group]") {
  auto const c5 = build_group("C5");
  CHECK(c5.subgroups() == std::vector<Mask>{1, c5.full()});
  CHECK(build_group("C4").subgroups().size() == 3);

  auto const q8   = build_group("Q8");
  auto       subs = q8.subgroups();
  CHECK(subs.size() == 6);
  auto oracle_subs = oracle::subgroups(q8);
  std::sort(oracle_subs.begin(), oracle_subs.end(), [](Mask a, Mask b) {
    return std::pair(cardinality(a), a) < std::pair(cardinality(b), b);
  });
  CHECK(subs == oracle_subs);
}

TEST_CASE("group properties over the catalog", "[group][property]") {
  for (auto const& name : catalog_names(1, 15)) {
    auto const g = build_group(name);
    INFO(name);
    for (Elem x = 0; x < g.order(); ++x) {
      CHECK(g.inv(g.inv(x)) == x);
      CHECK(g.order() % g.element_order(x) == 0);
      CHECK(g.element_order(x) == oracle::element_order(g, x));
    }
    for (Mask h : g.subgroups()) {
      CHECK(g.order() % static_cast<std::size_t>(cardinality(h)) == 0);
    }
  }
}

TEST_CASE("translate by x after x^{-1} is the identity", "[group][property]") {
  for (auto const* name : {"C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "D6"}) {
    auto const g = build_group(name);
    for (Elem x = 0; x < g.order(); ++x) {
      for (Mask a = 0; a <= g.full(); ++a) {
        REQUIRE(g.translate(x, g.translate(g.inv(x), a)) == a);
        REQUIRE(cardinality(g.translate(x, a)) == cardinality(a));
      }
    }
  }
  std::mt19937_64 rng(3);
  for (auto const& name : catalog_names(7, 15)) {
    auto const                          g = build_group(name);
    std::uniform_int_distribution<Mask> mask(0, g.full());
    for (int i = 0; i < 200; ++i) {
      Mask const a = mask(rng);
      Elem const x = static_cast<Elem>(rng() % g.order());
      REQUIRE(g.translate(x, g.translate(g.inv(x), a)) == a);
      if (a != 0) {
        REQUIRE(has(g.difference_set(a, a), FiniteGroup::identity));
      }
      REQUIRE(g.difference_set(a, a) == oracle::difference_set(g, a, a));
    }
  }
}

TEST_CASE("catalog lists one group per isomorphism class", "[group]") {
  CHECK(catalog_names(1, 13).size() == 25);
  CHECK(catalog_names(2, 13).size() == 24);
  CHECK(catalog_names(8, 8)
        == std::vector<std::string>{"C8", "C4xC2", "C2xC2xC2", "D8", "Q8"});
  CHECK_THROWS_AS(catalog_names(1, 16), CapacityError);
}
