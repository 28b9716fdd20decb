#pragma once

// Brute-force reference implementations. They share only the group table and
// mask primitives with the library and favour obviousness over speed.

#include <cstddef>
#include <vector>

#include "superx/group.hpp"
#include "superx/subset.hpp"

namespace superx::oracle {

  // A family given by its minimal sets (ascending).
  using Antichain = std::vector<Mask>;

  // {a * b^{-1} : a in A, b in B}, elementwise.
  Mask difference_set(FiniteGroup const& g, Mask a, Mask b);

  // Elementwise xA.
  Mask translate(FiniteGroup const& g, Elem x, Mask a);

  // Minimal sets of {A : A meets every member of f}, by testing all 2^n sets.
  Antichain transversal(std::size_t n, Antichain const& f);

  // Every antichain of non-empty subsets of an n-point set, except the empty
  // antichain. n <= 4.
  std::vector<Antichain> all_antichains(std::size_t n);

  // The antichains with F = F^perp, ascending. n <= 4.
  std::vector<Antichain> maximal_linked_systems(std::size_t n);

  // Maximal invariant linked families found by searching all unions of
  // shift orbits of subsets: keep the linked ones, then the inclusion-maximal
  // among those. |G| <= 5.
  std::vector<Antichain> invariant_linked_systems(FiniteGroup const& g);

  // sl(G) by scanning every subset by size.
  std::size_t sl(FiniteGroup const& g);

  // Membership of C in A o B read straight off the definition.
  bool circ_contains(FiniteGroup const& g,
                     Antichain const&   a,
                     Antichain const&   b,
                     Mask               c);

  // The order of x by repeated multiplication.
  std::size_t element_order(FiniteGroup const& g, Elem x);

  // All subsets closed under products and inverses that contain e.
  std::vector<Mask> subgroups(FiniteGroup const& g);

}  // namespace superx::oracle
