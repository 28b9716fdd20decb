#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "superx/subset.hpp"

namespace superx {

  // A monotone family of non-empty subsets of {0, ..., n-1}, stored as the
  // antichain of its minimal members in ascending numeric order. The family
  // always has at least one member and never contains the empty set.
  class SetFamily {
   public:
    // The inclusion hyperspace generated by `sets`: everything containing
    // one of them. Throws DomainError if `sets` is empty, contains the empty
    // set, or has bits outside the ground set; CapacityError if ground > 16.
    static SetFamily generate(std::size_t ground, std::span<Mask const> sets);

    static SetFamily generate(std::size_t                 ground,
                              std::initializer_list<Mask> sets) {
      return generate(ground, std::span<Mask const>(sets.begin(), sets.size()));
    }

    // The family {A : member(A)}. `member` must be monotone; only its
    // minimal members are kept.
    static SetFamily from_predicate(std::size_t                      ground,
                                    std::function<bool(Mask)> const& member);

    std::size_t ground_size() const noexcept {
      return _ground;
    }

    std::vector<Mask> const& minimal_sets() const noexcept {
      return _minimal;
    }

    // True iff some minimal set is a subset of a.
    bool contains(Mask a) const noexcept;

    friend bool operator==(SetFamily const&, SetFamily const&) = default;

    // Canonical order: by ground size, then lexicographically by the
    // minimal-set list.
    friend std::strong_ordering operator<=>(SetFamily const& a,
                                            SetFamily const& b) {
      if (auto c = a._ground <=> b._ground; c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(
          a._minimal.begin(), a._minimal.end(), b._minimal.begin(),
          b._minimal.end());
    }

    // "<{0,2},{0,3},{2,3}>"
    std::string to_string() const;

   private:
    SetFamily(std::size_t ground, std::vector<Mask> minimal)
        : _ground(ground), _minimal(std::move(minimal)) {}

    std::size_t       _ground = 0;
    std::vector<Mask> _minimal;
  };

  // Minimal elements of `sets` (duplicates removed), ascending.
  std::vector<Mask> minimal_elements(std::vector<Mask> sets);

  SetFamily generate_family(std::size_t ground, std::span<Mask const> sets);

  // F^perp = {A : A meets every member of F}, as the antichain of minimal
  // hitting sets of the minimal sets of F.
  SetFamily transversal(SetFamily const& f);

  // Every two members intersect.
  bool is_linked(SetFamily const& f);

  // F = F^perp.
  bool is_maximal_linked(SetFamily const& f);

  // The members of f as a bitmap over all 2^n subsets (n <= 6): bit A is set
  // iff A belongs to f.
  std::uint64_t membership_bits(SetFamily const& f);

}  // namespace superx
