#pragma once

// Reference values the verifier compares against, one table per result.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace superx::expected {

  struct GroupValue {
    std::string_view group;
    std::size_t      value;
  };

  // |lambda(G)| and |lambda(G)/G| for |G| = 1..6 (index = order - 1).
  inline constexpr std::array<std::size_t, 6> kLambdaSize   = {1, 2, 4, 12, 81, 2646};
  inline constexpr std::array<std::size_t, 6> kLambdaOrbits = {1, 1, 2, 3, 17, 447};

  // sl(G) for every group of order at most 13, in the reference order.
  inline constexpr std::array<GroupValue, 24> kSl = {{
      {"C2", 2},   {"C3", 2},    {"C5", 3},    {"C4", 3},     {"C2xC2", 3},
      {"C6", 3},   {"D6", 4},    {"C8", 4},    {"C4xC2", 4},  {"D8", 4},
      {"Q8", 4},   {"C2xC2xC2", 5}, {"C7", 3}, {"C11", 4},    {"C13", 4},
      {"C9", 4},   {"C3xC3", 4}, {"C10", 4},   {"D10", 4},    {"C12", 4},
      {"C2xC6", 5}, {"D12", 5},  {"A4", 5},    {"C3:C4", 5},
  }};

  // Number of maximal invariant linked systems for |G| <= 8.
  inline constexpr std::array<GroupValue, 13> kInvariantCount = {{
      {"C2", 1}, {"C3", 1}, {"C4", 1}, {"C2xC2", 1}, {"C5", 1},
      {"D6", 1}, {"C6", 2}, {"C7", 3}, {"C2xC2xC2", 1}, {"D8", 2},
      {"C4xC2", 4}, {"C8", 8}, {"Q8", 8},
  }};

  // s = |S/~| for the even groups where it is worked out.
  inline constexpr std::array<GroupValue, 5> kSimClasses = {{
      {"C6", 1}, {"C8", 3}, {"C4xC2", 2}, {"D8", 1}, {"Q8", 3},
  }};

  // Structure of lambda(G) for |G| <= 5.
  struct LambdaStructure {
    std::string_view group;
    std::size_t      idempotents;
    std::size_t      minimal_ideal;
    std::size_t      maximal_group;  // largest maximal subgroup
    bool             has_zero;
  };

  inline constexpr std::array<LambdaStructure, 5> kStructure = {{
      {"C2", 1, 2, 2, false},
      {"C3", 2, 1, 3, true},
      {"C4", 2, 8, 8, false},
      {"C2xC2", 2, 8, 8, false},
      {"C5", 5, 1, 5, true},
  }};

  // lambda(C5), by catalog name.
  inline constexpr std::array<std::string_view, 5> kC5Idempotents
      = {"U", "Z", "Lambda4", "Lambda", "2Lambda"};
  inline constexpr std::size_t kC5SqrtIdempotents = 41;
  inline constexpr std::size_t kC5SqrtZExtra      = 24;  // |sqrt(E)| - |T17|

  // Groups of order <= 6 whose superextension has a zero.
  inline constexpr std::array<std::string_view, 3> kZeroGroups = {"C1", "C3", "C5"};
  inline constexpr std::size_t kMaxCommutativeOrder            = 4;

  template <std::size_t N>
  std::optional<std::size_t> lookup(std::array<GroupValue, N> const& table,
                                    std::string_view                 group) {
    for (auto const& row : table) {
      if (row.group == group) {
        return row.value;
      }
    }
    return std::nullopt;
  }

}  // namespace superx::expected
