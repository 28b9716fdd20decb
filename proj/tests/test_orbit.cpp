#include <catch_amalgamated.hpp>

#include <algorithm>

#include "superx/orbit.hpp"

using namespace superx;

TEST_CASE("orbit counts", "[orbit]") {
  CHECK(orbit_quotient(build_lambda_table(build_group("C3"))).orbit_count() == 2);
  CHECK(orbit_quotient(build_lambda_table(build_group("C4"))).orbit_count() == 3);
  CHECK(orbit_quotient(build_lambda_table(build_group("C5"))).orbit_count() == 17);
  CHECK(count_lambda_orbits(build_group("C5")) == 17);
  CHECK(count_lambda_orbits(build_group("C6")) == 447);
}

TEST_CASE("counting orbits agrees with the quotient", "[orbit]") {
  for (auto const* name : {"C1", "C2", "C3", "C4", "C2xC2", "C5"}) {
    auto const g = build_group(name);
    CHECK(count_lambda_orbits(g) == orbit_quotient(build_lambda_table(g)).orbit_count());
  }
}

TEST_CASE("orbit representatives", "[orbit]") {
  auto const q = orbit_quotient(build_lambda_table(build_group("C4")));
  for (std::size_t k = 0; k < q.orbit_count(); ++k) {
    CHECK(q.orbit_of[q.orbit_reps[k]] == k);
  }
  CHECK(std::is_sorted(q.orbit_reps.begin(), q.orbit_reps.end()));
}

TEST_CASE("quotient product for abelian groups", "[orbit]") {
  auto const t = build_lambda_table(build_group("C3"));
  auto const q = orbit_quotient(t);
  REQUIRE(q.product);
  CHECK(q.product->size() == 2);
  CHECK(q.product->is_associative());
}

TEST_CASE("transversal subsemigroups", "[orbit]") {
  CHECK(transversal_subsemigroup(build_lambda_table(build_group("C3"))).has_value());
  CHECK_FALSE(transversal_subsemigroup(build_lambda_table(build_group("C5"))).has_value());
  auto const t = build_lambda_table(build_group("C4"));
  auto const q = orbit_quotient(t);
  auto const s = transversal_subsemigroup(t.table(), q);
  REQUIRE(s);
  {
    std::vector<bool> seen(q.orbit_count(), false);
    for (Index i : *s) {
      CHECK_FALSE(seen[q.orbit_of[i]]);
      seen[q.orbit_of[i]] = true;
    }
    for (Index i : *s) {
      for (Index j : *s) {
        CHECK(std::binary_search(s->begin(), s->end(), t.table()(i, j)));
      }
    }
  }
}
