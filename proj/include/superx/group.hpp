#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "superx/subset.hpp"

namespace superx {

  // Index of a group element, in [0, order). The identity is always 0.
  using Elem = std::uint32_t;

  inline constexpr std::size_t kMaxGroupOrder = kMaxGround;

  // A finite group of order at most 16 stored as an explicit multiplication
  // table. Construction validates the group axioms exhaustively, so every
  // FiniteGroup value is a genuine group with identity 0.
  class FiniteGroup {
   public:
    static constexpr Elem identity = 0;

    // `table[i][j]` is the index of the product i*j. Throws CapacityError if
    // the order exceeds 16 and ConsistencyError if the table is not a group
    // with identity 0.
    FiniteGroup(std::string name, std::vector<std::vector<Elem>> const& table);

    std::size_t order() const noexcept {
      return _order;
    }

    std::string const& name() const noexcept {
      return _name;
    }

    Elem mul(Elem x, Elem y) const noexcept {
      return _mul[x * _order + y];
    }

    Elem inv(Elem x) const noexcept {
      return _inv[x];
    }

    Mask full() const noexcept {
      return full_mask(_order);
    }

    // Smallest k >= 1 with x^k = e.
    std::size_t element_order(Elem x) const;

    // True iff every element has odd order.
    bool is_odd() const;

    // xA
    Mask translate(Elem x, Mask a) const noexcept;
    // x^{-1}A = {y : xy in A}
    Mask translate_inverse(Elem x, Mask a) const noexcept;
    // Ax
    Mask right_translate(Mask a, Elem x) const noexcept;
    // A^{-1}
    Mask inverse_set(Mask a) const noexcept;
    // AB = {ab : a in A, b in B}
    Mask product_set(Mask a, Mask b) const noexcept;
    // AB^{-1} = {ab^{-1} : a in A, b in B}
    Mask difference_set(Mask a, Mask b) const noexcept;

    bool is_subgroup(Mask h) const noexcept;

    // All subgroups, sorted by (size, mask value).
    std::vector<Mask> subgroups() const;

    // The subgroup h as a group in its own right; its elements are indexed in
    // increasing order of their index in this group (so e stays at 0).
    FiniteGroup subgroup(Mask h) const;

    // The multiplication table as rows.
    std::vector<std::vector<Elem>> table() const;

   private:
    std::string            _name;
    std::size_t            _order;
    std::vector<Elem>      _mul;
    std::vector<Elem>      _inv;
  };

  // Builds a group from its name:
  //
  //   C<n>             cyclic, element i is the i-th power of the generator
  //   C<a>xC<b>[x...]  direct product, (i, j) encoded as i*|H| + j
  //   D<2n>            dihedral of order 2n, r^k -> k, s r^k -> n + k
  //   Q8               quaternion units 1,-1,i,-i,j,-j,k,-k
  //   A4               even permutations of 4 points, lexicographic
  //   C3:C4            <a, b | a^4 = b^3 = 1, aba^{-1} = b^{-1}>, a^i b^j -> 3i + j
  //
  // Throws ParseError for unknown names and CapacityError for orders > 16.
  FiniteGroup build_group(std::string_view spec);

  // The fixed catalog of groups with order in [min_order, max_order], one per
  // isomorphism class, in order of increasing group order. Complete up to
  // order 15; throws CapacityError for max_order > 15.
  std::vector<std::string> catalog_names(std::size_t min_order,
                                         std::size_t max_order);

}  // namespace superx
