#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "superx/family.hpp"
#include "superx/group.hpp"

namespace superx {

  // AA^{-1} = G. Throws DomainError for the empty set.
  bool is_self_linked(FiniteGroup const& g, Mask a);

  // Smallest k with k^2 - k + 1 >= n, i.e. ceil((1 + sqrt(4n - 3)) / 2).
  std::size_t sl_lower_bound(std::size_t n);

  struct SelfLinkedMinimum {
    std::size_t size;
    Mask        witness;  // the first self-linked set of that size containing e
  };

  // sl(G) with a witness. Sizes are tried upward from sl_lower_bound and only
  // sets containing e are examined, since every self-linked set has a shift
  // through e.
  SelfLinkedMinimum min_self_linked(FiniteGroup const& g);

  inline std::size_t sl(FiniteGroup const& g) {
    return min_self_linked(g).size;
  }

  // The bounds relating sl(G), sl(H) and sl(G/H), where G/H is the space of
  // left cosets with G acting by left translation and A subset G/H counts as
  // self-linked when A meets gA for every g.
  struct SlBoundCheck {
    std::size_t sl_group;
    std::size_t sl_subgroup;
    std::size_t sl_quotient;
    std::size_t subgroup_order;
    std::size_t index;

    bool product_bound() const noexcept {
      return sl_group <= sl_subgroup * sl_quotient;
    }
    bool sum_bound() const noexcept {
      return sl_group < subgroup_order + index;
    }
    bool quotient_bound() const noexcept {
      return sl_quotient <= (index + 2) / 2;
    }
    bool holds() const noexcept {
      return product_bound() && sum_bound() && quotient_bound();
    }
  };

  // Throws DomainError if h is not a subgroup.
  SlBoundCheck check_slbound_composite(FiniteGroup const& g, Mask h);

  // S: the self-linked sets of size |G|/2, ascending. Throws DomainError for
  // odd order.
  std::vector<Mask> enumerate_half_self_linked(FiniteGroup const& g);

  // S/~ where A ~ B iff A = xB or G\A = xB for some x.
  struct SimClasses {
    std::vector<std::vector<Mask>> classes;  // each sorted; ordered by least member

    std::size_t s() const noexcept {
      return classes.size();
    }
  };

  // Throws DomainError for odd order and ConsistencyError if the relation,
  // read off directly, is not the equivalence relation of the partition.
  SimClasses sim_classes(FiniteGroup const& g);

  struct InvariantLinkedSystem {
    SetFamily family;
  };

  inline constexpr std::size_t kDefaultMaxInvariantOrder = 8;
  inline constexpr std::size_t kMaxInvariantOrder        = 10;

  // The maximal invariant linked systems, ordered by family. They are the
  // maximal cliques of the graph on self-linked sets with A -- B iff
  // AB^{-1} = G. Throws CapacityError above order 8 (10 with allow_large),
  // ConsistencyError if a clique is not shift- and superset-closed.
  std::vector<InvariantLinkedSystem> enumerate_invariant_mls(
      FiniteGroup const& g,
      bool               allow_large = false);

  // Systems containing every set of size |G|/2 + 1. Throws DomainError for
  // odd order.
  std::size_t up_L0_count(FiniteGroup const&                        g,
                          std::vector<InvariantLinkedSystem> const& systems);

  struct PartitionCheck {
    bool                            holds = true;
    std::optional<std::pair<Mask, Mask>> counterexample;  // (A, G\A), e in A
  };

  // For every partition G = A u B, AA^{-1} = G or BB^{-1} = G. Partitions are
  // scanned with e in A, A ascending; the first failure is returned.
  PartitionCheck partition_condition(FiniteGroup const& g);

  // The five equivalent conditions for odd groups:
  //   (1) lambda(G) has a right zero              [order <= 6 only]
  //   (2) some maximal invariant linked system is maximal linked
  //   (3) every maximal invariant linked system is maximal linked
  //   (4) the partition condition
  //   (5) every element has odd order
  struct OddEquivalence {
    std::optional<bool> right_zero;
    bool                some_invariant_maximal;
    bool                all_invariant_maximal;
    bool                partition;
    bool                odd;
    std::size_t         invariant_count;
    std::size_t         right_zero_count;  // 0 when (1) not evaluated

    bool agree() const noexcept {
      bool const v = odd;
      return some_invariant_maximal == v && all_invariant_maximal == v
             && partition == v && (!right_zero || *right_zero == v);
    }
  };

  // Throws CapacityError above order 8. Condition (1) is evaluated from a
  // freshly built lambda(G) table when |G| <= 6.
  OddEquivalence odd_equivalence_report(FiniteGroup const& g);

  // As above, with condition (1) taken from a known number of right zeros of
  // lambda(G), or left unevaluated for nullopt.
  OddEquivalence odd_equivalence_report(FiniteGroup const&         g,
                                        std::optional<std::size_t> right_zero_count);

}  // namespace superx
