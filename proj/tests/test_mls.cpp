#include <catch_amalgamated.hpp>

#include "superx/error.hpp"
#include "superx/mls.hpp"
#include "superx/oracle/brute_force.hpp"

using namespace superx;

TEST_CASE("maximal linked system counts", "[mls]") {
  CHECK(enumerate_mls(1).size() == 1);
  CHECK(enumerate_mls(2).size() == 2);
  CHECK(enumerate_mls(3).size() == 4);
  CHECK(enumerate_mls(4).size() == 12);
  CHECK(enumerate_mls(5).size() == 81);
  CHECK(count_mls(6) == 2646);
  CHECK(enumerate_mls(6).size() == 2646);
}

TEST_CASE("enumeration limits", "[mls]") {
  CHECK_THROWS_AS(enumerate_mls(0), DomainError);
  CHECK_THROWS_AS(enumerate_mls(7), CapacityError);
  CHECK_THROWS_AS(count_mls(8, true), CapacityError);
}

TEST_CASE("enumeration agrees with the antichain oracle", "[mls]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<oracle::Antichain> got;
    for (auto const& l : enumerate_mls(n)) {
      got.push_back(l.minimal_sets());
    }
    CHECK(got == oracle::maximal_linked_systems(n));
  }
}

TEST_CASE("every enumerated system is self-dual and sorted", "[mls][property]") {
  auto const all = enumerate_mls(5);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (auto const& l : all) {
    REQUIRE(transversal(l.family()) == l.family());
  }
}

TEST_CASE("construction checks maximality", "[mls]") {
  CHECK_NOTHROW(MaximalLinkedSystem(majority_family(3)));
  CHECK_THROWS_AS(MaximalLinkedSystem(majority_family(4)), DomainError);
}

TEST_CASE("shifts and principal ultrafilters", "[mls]") {
  auto const c5 = build_group("C5");
  auto const u  = principal_ultrafilter(c5, 2);
  CHECK(u.minimal_sets() == std::vector<Mask>{0b00100});
  CHECK(shift_mls(c5, 1, u) == principal_ultrafilter(c5, 3));
  auto const z = MaximalLinkedSystem(majority_family(c5));
  for (Elem x = 0; x < 5; ++x) {
    CHECK(shift_mls(c5, x, z) == z);
  }
  CHECK_THROWS_AS(shift_family(c5, 1, majority_family(4)), DomainError);
}

TEST_CASE("greedy extension", "[mls]") {
  auto const f = SetFamily::generate(4, {0b0011});
  auto const l = extend_to_maximal_linked(f);
  CHECK(l.contains(0b0011));
  CHECK(is_maximal_linked(l.family()));
  CHECK_THROWS_AS(extend_to_maximal_linked(SetFamily::generate(4, {0b0011, 0b1100})),
                  DomainError);
}

TEST_CASE("lambda serialization round-trips", "[mls]") {
  auto const all  = enumerate_mls(4);
  auto const text = serialize_lambda(all, 4, "C4");
  CHECK(text.rfind("superx-mls v1 ground=4 group=C4 count=12\n", 0) == 0);
  CHECK(parse_lambda(text) == all);
  CHECK_THROWS_AS(parse_lambda("superx-mls v1 ground=4 group=C4 count=13\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_lambda("garbage"), ParseError);
}
