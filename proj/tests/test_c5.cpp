#include <catch_amalgamated.hpp>

#include <set>

#include "superx/c5.hpp"
#include "superx/error.hpp"
#include "superx/superextension.hpp"

using namespace superx;

namespace {

  Mask digits(std::string_view s) {
    Mask m = 0;
    for (char c : s) {
      m |= singleton(static_cast<std::size_t>(c - '0'));
    }
    return m;
  }

}  // namespace

TEST_CASE("base systems", "[c5]") {
  CHECK(c5::base("U") == principal_ultrafilter(build_group("C5"), 0));
  CHECK(c5::base("Z").family() == majority_family(5));
  CHECK(c5::base("Delta").minimal_sets()
        == std::vector<Mask>{digits("02"), digits("03"), digits("23")});
  CHECK_THROWS_AS(c5::base("Omega"), ParseError);
}

TEST_CASE("shifting Delta by one", "[c5]") {
  auto const d1 = c5::resolve("Delta+1");
  CHECK(d1.minimal_sets() == std::vector<Mask>{digits("13"), digits("14"), digits("34")});
  CHECK(c5::render(d1) == "Delta+1");
  auto const g = build_group("C5");
  CHECK(d1 == shift_mls(g, 1, c5::base("Delta")));
}

TEST_CASE("affine images", "[c5]") {
  auto const l = c5::base("Lambda");
  CHECK(c5::affine_image(l, 1, 0) == l);
  CHECK(c5::affine_image(c5::affine_image(l, 2, 0), 3, 0) == l);
  CHECK(c5::resolve("2Lambda") == c5::affine_image(l, 2, 0));
  CHECK(c5::resolve("-2Theta+2") == c5::affine_image(c5::base("Theta"), -2, 2));
  CHECK_THROWS(c5::affine_image(l, 5, 0));
}

TEST_CASE("name parsing accepts Greek aliases", "[c5]") {
  CHECK(c5::resolve("Λ₄") == c5::base("Lambda4"));
  CHECK(c5::resolve("2Θ+2") == c5::resolve("2Theta+2"));
  CHECK(c5::resolve("−Λ₃") == c5::resolve("-Lambda3"));
  CHECK(c5::resolve("Γ-1") == c5::resolve("Gamma-1"));
  CHECK(c5::resolve("3Theta") == c5::resolve("-2Theta"));
  CHECK_THROWS_AS(c5::resolve("5Theta"), ParseError);
  CHECK_THROWS_AS(c5::resolve("Theta+"), ParseError);
  CHECK_THROWS_AS(c5::resolve(""), ParseError);
}

TEST_CASE("every element of lambda(C5) has a unique canonical name", "[c5]") {
  auto const            all = enumerate_mls(5);
  std::set<std::string> names;
  for (auto const& l : all) {
    auto const name = c5::render(l);
    names.insert(name);
    REQUIRE(c5::resolve(name) == l);
  }
  CHECK(names.size() == 81);
  CHECK(c5::named_catalog().size() >= 81);
}

TEST_CASE("orbit representatives", "[c5]") {
  auto const& names = c5::t17_names();
  REQUIRE(names.size() == 17);
  auto const g = build_group("C5");
  std::set<std::vector<Mask>> orbits;
  for (auto const& n : names) {
    auto l = c5::resolve(n);
    // Canonical orbit key: least shift.
    std::vector<Mask> key = l.minimal_sets();
    for (Elem x = 1; x < 5; ++x) {
      key = std::min(key, shift_mls(g, x, l).minimal_sets());
    }
    orbits.insert(key);
  }
  CHECK(orbits.size() == 17);
}

TEST_CASE("the reference orbit table matches row o column", "[c5]") {
  auto const cmp = c5::compare_t17();
  CHECK(cmp.cells.size() == 289);
  CHECK(cmp.row_col_matches == 289);
  CHECK(cmp.col_row_matches == 155);
  CHECK(cmp.passed());
}
