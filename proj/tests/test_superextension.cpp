#include <catch_amalgamated.hpp>

#include <random>

#include "superx/error.hpp"
#include "superx/oracle/brute_force.hpp"
#include "superx/superextension.hpp"

using namespace superx;

TEST_CASE("circ on principal ultrafilters is the group product", "[lambda]") {
  auto const g = build_group("D6");
  for (Elem x = 0; x < 6; ++x) {
    for (Elem y = 0; y < 6; ++y) {
      CHECK(circ(g, principal_ultrafilter(g, x), principal_ultrafilter(g, y))
            == principal_ultrafilter(g, g.mul(x, y)));
    }
  }
}

TEST_CASE("circ rejects mismatched grounds", "[lambda]") {
  auto const g = build_group("C3");
  CHECK_THROWS_AS(circ(g, majority_family(3), majority_family(4)), DomainError);
}

TEST_CASE("circ agrees with the definition", "[lambda][property]") {
  std::mt19937_64 rng(11);
  for (auto const* name : {"C3", "C4", "C2xC2", "C5"}) {
    auto const g   = build_group(name);
    auto const all = enumerate_mls(g.order());
    for (int i = 0; i < 40; ++i) {
      auto const& a = all[rng() % all.size()];
      auto const& b = all[rng() % all.size()];
      auto const  c = circ(g, a, b);
      for (Mask m = 1; m <= g.full(); ++m) {
        REQUIRE(c.contains(m)
                == oracle::circ_contains(g, a.minimal_sets(), b.minimal_sets(), m));
      }
    }
  }
}

TEST_CASE("lambda tables have the expected sizes", "[lambda]") {
  CHECK(build_lambda_table(build_group("C1")).size() == 1);
  CHECK(build_lambda_table(build_group("C2")).size() == 2);
  CHECK(build_lambda_table(build_group("C3")).size() == 4);
  CHECK(build_lambda_table(build_group("C4")).size() == 12);
  CHECK(build_lambda_table(build_group("C5")).size() == 81);
  CHECK_THROWS_AS(build_lambda_table(build_group("C7")), CapacityError);
}

TEST_CASE("lambda tables are associative and agree with circ", "[lambda]") {
  for (auto const* name : {"C3", "C4", "C2xC2"}) {
    auto const t = build_lambda_table(build_group(name));
    CHECK(t.table().is_associative());
    auto const& el = t.elements();
    for (Index i = 0; i < t.size(); ++i) {
      for (Index j = 0; j < t.size(); ++j) {
        REQUIRE(el[t.table()(i, j)] == circ(t.group(), el[i], el[j]));
      }
    }
  }
}

TEST_CASE("single-threaded and parallel builds agree", "[lambda]") {
  auto const g = build_group("C5");
  CHECK(build_lambda_table(g, 1).table() == build_lambda_table(g, 4).table());
}

TEST_CASE("principal ultrafilters and the action", "[lambda]") {
  auto const t = build_lambda_table(build_group("C4"));
  auto const& g = t.group();
  for (Elem x = 0; x < 4; ++x) {
    CHECK(t.elements()[t.principal(x)] == principal_ultrafilter(g, x));
    for (Index i = 0; i < t.size(); ++i) {
      // Left translation is left multiplication by the ultrafilter.
      REQUIRE(t.shift(x, i) == t.table()(t.principal(x), i));
    }
  }
  CHECK(t.index_of(majority_family(3)) == std::nullopt);
}

TEST_CASE("table serialization round-trips", "[lambda]") {
  auto const t    = build_lambda_table(build_group("C2xC2"));
  auto const text = serialize_table(t);
  CHECK(text.rfind("superx-table v1 group=C2xC2 order=12\n", 0) == 0);
  auto const back = parse_table(text);
  CHECK(back.table() == t.table());
  CHECK(back.elements() == t.elements());
  CHECK(serialize_table(back) == text);
  CHECK_THROWS_AS(parse_table("superx-table v1 group=C2xC2 order=12\n"), ParseError);
  // A system that is not maximal linked is caught.
  auto      bad = text;
  auto const at = bad.find("\n[8]\n");
  REQUIRE(at != std::string::npos);
  bad.replace(at, 5, "\n[9]\n");
  CHECK_THROWS(parse_table(bad));
}
