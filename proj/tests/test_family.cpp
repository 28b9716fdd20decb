#include <catch_amalgamated.hpp>

#include <random>

#include "superx/error.hpp"
#include "superx/family.hpp"
#include "superx/mls.hpp"
#include "superx/oracle/brute_force.hpp"

using namespace superx;

TEST_CASE("generate keeps the minimal sets", "[family]") {
  auto const f = SetFamily::generate(4, {0b0011, 0b0111, 0b1100, 0b0011});
  CHECK(f.minimal_sets() == std::vector<Mask>{0b0011, 0b1100});
  CHECK(f.contains(0b1011));
  CHECK_FALSE(f.contains(0b0101));
  CHECK(f.to_string() == "<{0,1},{2,3}>");
}

TEST_CASE("generate rejects bad input", "[family]") {
  CHECK_THROWS_AS(SetFamily::generate(3, {}), DomainError);
  CHECK_THROWS_AS(SetFamily::generate(3, {0}), DomainError);
  CHECK_THROWS_AS(SetFamily::generate(3, {0b1000}), DomainError);
  CHECK_THROWS_AS(SetFamily::generate(17, {1}), CapacityError);
}

TEST_CASE("transversal of small families", "[family]") {
  auto const z = majority_family(3);
  CHECK(transversal(z) == z);
  auto const point = SetFamily::generate(3, {0b001});
  CHECK(transversal(point) == point);
  // <{0,1}>^perp = <{0},{1}>
  CHECK(transversal(SetFamily::generate(3, {0b011})).minimal_sets()
        == std::vector<Mask>{0b001, 0b010});
}

TEST_CASE("linkedness", "[family]") {
  CHECK(is_linked(SetFamily::generate(4, {0b0011, 0b0110, 0b0101})));
  CHECK_FALSE(is_linked(SetFamily::generate(4, {0b0011, 0b1100})));
  CHECK(is_maximal_linked(majority_family(5)));
  CHECK_FALSE(is_maximal_linked(majority_family(4)));
}

TEST_CASE("the majority family is maximal linked exactly on odd grounds", "[family]") {
  for (std::size_t n = 1; n <= 9; ++n) {
    auto const l0 = majority_family(n);
    INFO(n);
    CHECK(is_linked(l0));
    CHECK(is_maximal_linked(l0) == (n % 2 == 1));
  }
}

TEST_CASE("a triangle is maximal linked on any ground", "[family]") {
  for (std::size_t n = 3; n <= 8; ++n) {
    CHECK(is_maximal_linked(SetFamily::generate(n, {0b011, 0b101, 0b110})));
  }
}

TEST_CASE("transversal matches the brute-force oracle", "[family][property]") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 500; ++round) {
    std::size_t const                   n = 1 + rng() % 6;
    std::uniform_int_distribution<Mask> pick(1, full_mask(n));
    std::vector<Mask>                   sets(1 + rng() % 4);
    for (auto& s : sets) {
      s = pick(rng);
    }
    auto const f = SetFamily::generate(n, sets);
    auto const t = transversal(f);
    REQUIRE(t.minimal_sets() == oracle::transversal(n, f.minimal_sets()));
    // Involution.
    REQUIRE(transversal(t) == f);
    // Linked iff F is contained in F^perp.
    bool inside = true;
    for (Mask m : f.minimal_sets()) {
      inside = inside && t.contains(m);
    }
    REQUIRE(is_linked(f) == inside);
  }
}

TEST_CASE("membership bits agree with contains", "[family]") {
  auto const     f    = majority_family(5);
  std::uint64_t  bits = membership_bits(f);
  for (Mask a = 0; a < 32; ++a) {
    CHECK(((bits >> a) & 1U) == (f.contains(a) ? 1U : 0U));
  }
}

TEST_CASE("family serialization round-trips", "[family]") {
  auto const f = SetFamily::generate(5, {0b00011, 0b10100});
  CHECK(serialize_family(f) == "[3,20]");
  CHECK(parse_family(serialize_family(f), 5) == f);
  CHECK_THROWS_AS(parse_family("[3,", 5), ParseError);
  CHECK_THROWS_AS(parse_family("[64]", 5), ParseError);
}
