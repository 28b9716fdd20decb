#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "superx/mls.hpp"

namespace superx::c5 {

  // Named maximal linked systems on C5 = {0,1,2,3,4} (additive notation).
  //
  // Base names: U, Z, Lambda4, Lambda, Delta, Lambda3, Theta, Gamma. A
  // derived name "aL+b" is the image of base L under x -> ax + b mod 5, with
  // a in {1, -1, 2, -2} (written "", "-", "2", "-2") and b written as a
  // signed digit, e.g. "2Theta+2", "-Lambda3", "Theta-1". The Greek letters
  // (and U/Z script forms) are accepted as aliases when parsing.

  // f_{a,b}(L) = {aA + b : A in L}; a must be a unit mod 5.
  MaximalLinkedSystem affine_image(MaximalLinkedSystem const& l, int a, int b);

  // The base system with this name. Throws ParseError for unknown names.
  MaximalLinkedSystem base(std::string_view name);

  // Resolves a full name such as "2Theta+2". Throws ParseError.
  MaximalLinkedSystem resolve(std::string_view name);

  // Canonical name: first match in base order (U, Z, Lambda4, Lambda, Delta,
  // Lambda3, Theta, Gamma), then a in (1, -1, 2, -2), then b in
  // (0, 1, -1, 2, -2). Throws DomainError if no name fits.
  std::string render(MaximalLinkedSystem const& l);

  // The nine systems defined by explicit generator lists (including
  // "2Lambda"), plus the canonical name of every element of lambda(C5).
  std::map<std::string, MaximalLinkedSystem> named_catalog();

  // Representatives of the 17 orbits, in table order: U, Z, Lambda4, Lambda,
  // Delta, Lambda3, -Lambda3, 2Lambda, 2Delta, 2Lambda3, -2Lambda3, Theta,
  // 2Theta, Gamma, -Gamma, 2Gamma, -2Gamma.
  std::vector<std::string> const& t17_names();

  // Expected product names for the 17x17 table under row o column, taken
  // from the reference table (aTheta/aGamma column expanded; U and Z rows
  // and columns filled from U being the identity and Z the zero).
  std::vector<std::vector<std::string>> const& t17_expected();

  struct T17Cell {
    std::string row;
    std::string col;
    std::string expected;
    std::string row_col;  // rendered name of row o col
    std::string col_row;  // rendered name of col o row
    bool        row_col_match;
    bool        col_row_match;
  };

  struct T17Comparison {
    std::vector<T17Cell> cells;  // row-major, 289 entries
    std::size_t          row_col_matches = 0;
    std::size_t          col_row_matches = 0;

    // Exactly one orientation matches every cell.
    bool passed() const noexcept {
      std::size_t const n = cells.size();
      return (row_col_matches == n) != (col_row_matches == n);
    }
  };

  T17Comparison compare_t17();

}  // namespace superx::c5
