#include <catch_amalgamated.hpp>

#include "superx/error.hpp"
#include "superx/semigroup.hpp"

using namespace superx;

namespace {

  // {0, 1} under min (a semilattice with zero 0 and identity 1).
  SemigroupTable min2() {
    return SemigroupTable(2, {0, 0, 0, 1}, {"0", "1"});
  }

  // Left-zero band on two elements: xy = x.
  SemigroupTable left_zero2() {
    return SemigroupTable(2, {0, 0, 1, 1});
  }

}  // namespace

TEST_CASE("table validation", "[semigroup]") {
  CHECK_THROWS_AS(SemigroupTable(2, {0, 0, 0, 2}), ConsistencyError);
  CHECK_THROWS_AS(SemigroupTable(2, {0, 0, 0}), ConsistencyError);
  CHECK_THROWS_AS(SemigroupTable(2, {0, 0, 0, 1}, {"a"}), ConsistencyError);
  CHECK(min2().label(1) == "1");
  CHECK(left_zero2().label(1) == "1");
}

TEST_CASE("associativity", "[semigroup]") {
  CHECK(min2().is_associative());
  CHECK(group_table(build_group("D6")).is_associative());
  // x*y = x+1 mod 3 is not associative.
  CHECK_FALSE(SemigroupTable(3, {1, 1, 1, 2, 2, 2, 0, 0, 0}).is_associative());
}

TEST_CASE("zeros and idempotents", "[semigroup]") {
  auto const s = min2();
  CHECK(idempotents(s) == std::vector<Index>{0, 1});
  CHECK(zero(s) == Index{0});
  auto const lz = left_zero2();
  CHECK(left_zeros(lz) == std::vector<Index>{0, 1});
  CHECK(right_zeros(lz).empty());
  CHECK_FALSE(zero(lz).has_value());
  CHECK(right_zeros(SemigroupTable(2, {0, 1, 0, 1})) == std::vector<Index>{0, 1});
}

TEST_CASE("adjoining identity and zero", "[semigroup]") {
  auto const g  = group_table(build_group("C2"));
  auto const g0 = adjoin_zero(g);
  CHECK(g0.size() == 3);
  CHECK(zero(g0) == Index{2});
  CHECK(g0.is_associative());
  auto const g1 = adjoin_identity(g);
  CHECK(g1.size() == 3);
  CHECK(g1(2, 1) == 1);
  CHECK(g1(1, 1) == 0);
  CHECK(g1.is_associative());
}

TEST_CASE("commutativity", "[semigroup]") {
  CHECK(is_commutative(group_table(build_group("C2xC2"))).commutative);
  auto const c = is_commutative(left_zero2());
  CHECK_FALSE(c.commutative);
  CHECK(c.witness == std::pair<Index, Index>{0, 1});
  auto const d6 = is_commutative(group_table(build_group("D6")));
  CHECK_FALSE(d6.commutative);
  REQUIRE(d6.witness);
}

TEST_CASE("ideals", "[semigroup]") {
  auto const s = adjoin_zero(group_table(build_group("C3")));
  CHECK(minimal_ideal(s) == std::vector<Index>{3});
  CHECK(principal_ideal(s, 1) == std::vector<Index>{0, 1, 2, 3});
  // In a left-zero band the whole band is the minimal ideal.
  CHECK(minimal_ideal(left_zero2()) == std::vector<Index>{0, 1});
}

TEST_CASE("maximal subgroups", "[semigroup]") {
  auto const s  = adjoin_zero(group_table(build_group("C4")));
  auto const h0 = maximal_subgroup_at(s, 0);
  CHECK(h0.elements == std::vector<Index>{0, 1, 2, 3});
  CHECK(find_isomorphism(h0.table, group_table(build_group("C4"))).has_value());
  CHECK(maximal_subgroup_at(s, 4).elements == std::vector<Index>{4});
  CHECK_THROWS_AS(maximal_subgroup_at(s, 1), DomainError);
}

TEST_CASE("centre and square roots of idempotents", "[semigroup]") {
  auto const d6 = group_table(build_group("D6"));
  CHECK(central_elements(d6) == std::vector<Index>{0});
  // x^2 = e for e and the three reflections.
  CHECK(sqrt_of_idempotents(d6) == std::vector<Index>{0, 3, 4, 5});
}

TEST_CASE("isomorphism search", "[semigroup]") {
  auto const c4  = group_table(build_group("C4"));
  auto const v4  = group_table(build_group("C2xC2"));
  CHECK_FALSE(find_isomorphism(c4, v4).has_value());

  // Relabel C4 by the permutation 0->0, 1->3, 2->1, 3->2.
  std::vector<Index> const p = {0, 3, 1, 2};
  std::vector<Index>       relabel(16);
  for (Index a = 0; a < 4; ++a) {
    for (Index b = 0; b < 4; ++b) {
      relabel[p[a] * 4 + p[b]] = p[(a + b) % 4];
    }
  }
  auto const t = SemigroupTable(4, relabel);
  auto const f = find_isomorphism(c4, t);
  REQUIRE(f);
  for (Index a = 0; a < 4; ++a) {
    for (Index b = 0; b < 4; ++b) {
      CHECK((*f)[c4(a, b)] == t((*f)[a], (*f)[b]));
    }
  }
  CHECK(find_isomorphism(group_table(build_group("C6")),
                         group_table(build_group("D6")))
        == std::nullopt);
  CHECK(find_isomorphism(direct_product(group_table(build_group("C2")),
                                        group_table(build_group("C3"))),
                         group_table(build_group("C6")))
            .has_value());
}

TEST_CASE("restriction", "[semigroup]") {
  auto const s   = adjoin_zero(group_table(build_group("C4")));
  Index const sub[] = {0, 2, 4};
  auto const r   = s.restrict_to(sub);
  CHECK(r.size() == 3);
  CHECK(r(1, 1) == 0);
  CHECK(r(2, 1) == 2);
  Index const bad[] = {0, 1};
  CHECK_THROWS_AS(s.restrict_to(bad), DomainError);
}
