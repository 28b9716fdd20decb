#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "superx/error.hpp"
#include "superx/expected.hpp"
#include "superx/invariant.hpp"
#include "superx/mls.hpp"
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

TEST_CASE("self-linked sets", "[invariant]") {
  CHECK(is_self_linked(build_group("C8"), set_of({0, 1, 3, 4})));
  CHECK_FALSE(is_self_linked(build_group("C8"), set_of({0, 1, 2, 3})));
  CHECK(is_self_linked(build_group("C7"), set_of({0, 1, 3})));
  CHECK_FALSE(is_self_linked(build_group("C2xC2xC2"), set_of({0, 4, 2, 1})));
  CHECK_THROWS_AS(is_self_linked(build_group("C3"), 0), DomainError);
}

TEST_CASE("lower bound", "[invariant]") {
  CHECK(sl_lower_bound(1) == 1);
  CHECK(sl_lower_bound(2) == 2);
  CHECK(sl_lower_bound(3) == 2);
  CHECK(sl_lower_bound(4) == 3);
  CHECK(sl_lower_bound(7) == 3);
  CHECK(sl_lower_bound(8) == 4);
  CHECK(sl_lower_bound(13) == 4);
  CHECK(sl_lower_bound(14) == 5);
}

TEST_CASE("sl agrees with the reference table except D10", "[invariant]") {
  for (auto const& [name, value] : expected::kSl) {
    auto const g = build_group(name);
    auto const m = min_self_linked(g);
    INFO(name);
    CHECK(m.size == oracle::sl(g));
    CHECK(cardinality(m.witness) == static_cast<int>(m.size));
    CHECK(is_self_linked(g, m.witness));
    if (name == "D10") {
      CHECK(m.size == 5);
    } else {
      CHECK(m.size == value);
    }
  }
}

TEST_CASE("no 4-subset of D10 is self-linked", "[invariant]") {
  auto const g = build_group("D10");
  bool       any = false;
  for_each_k_subset(10, 4, [&](Mask a) { any = any || is_self_linked(g, a); });
  CHECK_FALSE(any);
  // {1, r, r^3, s}: r^k -> k, s r^k -> 5 + k.
  CHECK_FALSE(is_self_linked(g, set_of({0, 1, 3, 5})));
}

TEST_CASE("sl is invariant under translation", "[invariant][property]") {
  std::mt19937_64 rng(5);
  for (auto const* name : {"C7", "D8", "Q8", "C9", "A4"}) {
    auto const                          g = build_group(name);
    std::uniform_int_distribution<Mask> pick(1, g.full());
    for (int i = 0; i < 300; ++i) {
      Mask const a = pick(rng);
      Elem const x = static_cast<Elem>(rng() % g.order());
      REQUIRE(is_self_linked(g, a) == is_self_linked(g, g.translate(x, a)));
      REQUIRE(is_self_linked(g, a) == is_self_linked(g, g.right_translate(a, x)));
      if (is_self_linked(g, a)) {
        REQUIRE(static_cast<std::size_t>(cardinality(a)) >= sl(g));
      }
    }
  }
}

TEST_CASE("composite bounds", "[invariant]") {
  auto const c9 = build_group("C9");
  auto const b  = check_slbound_composite(c9, set_of({0, 3, 6}));
  CHECK(b.sl_group == 4);
  CHECK(b.sl_subgroup == 2);
  CHECK(b.sl_quotient == 2);
  CHECK(b.holds());

  auto const q8 = build_group("Q8");
  // <i> = {1, -1, i, -i}
  auto const q = check_slbound_composite(q8, set_of({0, 1, 2, 3}));
  CHECK(q.sl_group < 6);
  CHECK(q.holds());

  CHECK_THROWS_AS(check_slbound_composite(c9, set_of({0, 1})), DomainError);
}

TEST_CASE("composite bounds hold for every subgroup", "[invariant][property]") {
  for (auto const& name : catalog_names(2, 12)) {
    auto const g = build_group(name);
    for (Mask h : g.subgroups()) {
      INFO(name << " " << mask_to_string(h));
      CHECK(check_slbound_composite(g, h).holds());
    }
  }
}

TEST_CASE("half-size self-linked sets", "[invariant]") {
  auto const c6 = build_group("C6");
  auto const s  = enumerate_half_self_linked(c6);
  CHECK(s.size() == 12);
  for (Mask a : s) {
    CHECK(cardinality(a) == 3);
  }
  // The index-2 subgroup and its coset are the only 3-sets that fail.
  CHECK(std::find(s.begin(), s.end(), set_of({0, 2, 4})) == s.end());
  CHECK_THROWS_AS(enumerate_half_self_linked(build_group("C5")), DomainError);
}

namespace {

  Mask involutions_and_e(FiniteGroup const& g) {
    Mask m = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if (g.mul(x, x) == FiniteGroup::identity) {
        m |= singleton(x);
      }
    }
    return m;
  }

}  // namespace

TEST_CASE("S for C4xC2 is the 4-sets meeting G2 oddly", "[invariant]") {
  auto const        g  = build_group("C4xC2");
  Mask const        g2 = involutions_and_e(g);
  REQUIRE(cardinality(g2) == 4);
  std::vector<Mask> want;
  for_each_k_subset(8, 4, [&](Mask a) {
    if (cardinality(a & g2) % 2 == 1) {
      want.push_back(a);
    }
  });
  CHECK(enumerate_half_self_linked(g) == want);
}

TEST_CASE("S for D8 meets the rotations in two points", "[invariant]") {
  auto const g = build_group("D8");
  Mask const h = set_of({0, 1, 2, 3});
  auto const s = enumerate_half_self_linked(g);
  CHECK_FALSE(s.empty());
  for (Mask a : s) {
    CHECK(cardinality(a & h) == 2);
  }
}

TEST_CASE("S for Q8 through +-1", "[invariant]") {
  auto const  g  = build_group("Q8");
  Mask const  pm = set_of({0, 1});
  std::size_t n  = 0;
  for (Mask a : enumerate_half_self_linked(g)) {
    n += is_subset(pm, a) ? 1 : 0;
  }
  CHECK(n == 12);
}

TEST_CASE("the classes of S", "[invariant]") {
  for (auto const& [name, value] : expected::kSimClasses) {
    INFO(name);
    CHECK(sim_classes(build_group(name)).s() == value);
  }
  auto const c = sim_classes(build_group("C6"));
  std::size_t total = 0;
  for (auto const& cls : c.classes) {
    CHECK(std::is_sorted(cls.begin(), cls.end()));
    total += cls.size();
  }
  CHECK(total == 12);
}

TEST_CASE("invariant maximal linked systems", "[invariant]") {
  for (auto const& [name, value] : expected::kInvariantCount) {
    INFO(name);
    CHECK(enumerate_invariant_mls(build_group(name)).size() == value);
  }
  auto const c7 = enumerate_invariant_mls(build_group("C7"));
  REQUIRE(c7.size() == 3);
  for (auto const& s : c7) {
    CHECK(is_maximal_linked(s.family));
  }
  CHECK_THROWS_AS(enumerate_invariant_mls(build_group("C9")), CapacityError);
  CHECK_THROWS_AS(enumerate_invariant_mls(build_group("C11"), true), CapacityError);
}

TEST_CASE("invariant systems agree with the oracle", "[invariant]") {
  for (auto const& name : catalog_names(1, 5)) {
    auto const g = build_group(name);
    std::vector<oracle::Antichain> got;
    for (auto const& s : enumerate_invariant_mls(g)) {
      got.push_back(s.family.minimal_sets());
    }
    std::sort(got.begin(), got.end());
    auto want = oracle::invariant_linked_systems(g);
    std::sort(want.begin(), want.end());
    INFO(name);
    CHECK(got == want);
  }
}

TEST_CASE("invariant systems are shift-closed and linked", "[invariant][property]") {
  for (auto const& name : catalog_names(6, 8)) {
    auto const g = build_group(name);
    for (auto const& s : enumerate_invariant_mls(g)) {
      REQUIRE(is_linked(s.family));
      for (Elem x = 0; x < g.order(); ++x) {
        REQUIRE(shift_family(g, x, s.family) == s.family);
      }
    }
  }
}

TEST_CASE("the count above L0 is 2^s", "[invariant]") {
  for (auto const& [name, s] : expected::kSimClasses) {
    auto const g = build_group(name);
    INFO(name);
    CHECK(up_L0_count(g, enumerate_invariant_mls(g)) == (std::size_t{1} << s));
  }
  auto const c5 = build_group("C5");
  CHECK_THROWS_AS(up_L0_count(c5, enumerate_invariant_mls(c5)), DomainError);
}

TEST_CASE("partition condition", "[invariant]") {
  CHECK(partition_condition(build_group("C5")).holds);
  CHECK(partition_condition(build_group("C7")).holds);
  auto const c4 = build_group("C4");
  auto const p  = partition_condition(c4);
  CHECK_FALSE(p.holds);
  REQUIRE(p.counterexample);
  auto const [a, b] = *p.counterexample;
  CHECK((a | b) == c4.full());
  CHECK((a & b) == 0);
  CHECK(has(a, 0));
  CHECK_FALSE(is_self_linked(c4, a));
  CHECK_FALSE(is_self_linked(c4, b));
}

TEST_CASE("odd-group equivalence", "[invariant]") {
  auto const d6 = odd_equivalence_report(build_group("D6"));
  CHECK(d6.right_zero == false);
  CHECK_FALSE(d6.some_invariant_maximal);
  CHECK_FALSE(d6.all_invariant_maximal);
  CHECK_FALSE(d6.partition);
  CHECK_FALSE(d6.odd);
  CHECK(d6.agree());

  auto const c5 = odd_equivalence_report(build_group("C5"));
  CHECK(c5.right_zero == true);
  CHECK(c5.right_zero_count == 1);
  CHECK(c5.agree());

  auto const c7 = odd_equivalence_report(build_group("C7"));
  CHECK_FALSE(c7.right_zero.has_value());
  CHECK(c7.odd);
  CHECK(c7.agree());

  for (auto const& name : catalog_names(1, 8)) {
    INFO(name);
    CHECK(odd_equivalence_report(build_group(name), std::nullopt).agree());
  }
}
