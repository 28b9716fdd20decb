#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "superx/family.hpp"
#include "superx/group.hpp"

namespace superx {

  // A maximal linked system: a family equal to its own transversal.
  class MaximalLinkedSystem {
   public:
    // Throws DomainError unless f == transversal(f).
    explicit MaximalLinkedSystem(SetFamily f);

    SetFamily const& family() const noexcept {
      return _family;
    }

    std::size_t ground_size() const noexcept {
      return _family.ground_size();
    }

    std::vector<Mask> const& minimal_sets() const noexcept {
      return _family.minimal_sets();
    }

    bool contains(Mask a) const noexcept {
      return _family.contains(a);
    }

    friend bool operator==(MaximalLinkedSystem const&,
                           MaximalLinkedSystem const&) = default;
    friend auto operator<=>(MaximalLinkedSystem const& a,
                            MaximalLinkedSystem const& b) {
      return a._family <=> b._family;
    }

    std::string to_string() const {
      return _family.to_string();
    }

   private:
    struct Trusted {};
    MaximalLinkedSystem(SetFamily f, Trusted) : _family(std::move(f)) {}

    friend std::vector<MaximalLinkedSystem> enumerate_mls(std::size_t, bool);
    friend MaximalLinkedSystem shift_mls(FiniteGroup const&,
                                         Elem,
                                         MaximalLinkedSystem const&);

    SetFamily _family;
  };

  inline constexpr std::size_t kDefaultMaxMlsGround = 6;
  inline constexpr std::size_t kMaxMlsGround        = 7;

  // All maximal linked systems on an n-element set in canonical order.
  // n must lie in [1, 6], or [1, 7] with allow_large. Throws DomainError for
  // n = 0 and CapacityError above the limit.
  std::vector<MaximalLinkedSystem> enumerate_mls(std::size_t n,
                                                 bool allow_large = false);

  // Number of maximal linked systems on an n-element set, without
  // materializing them.
  std::size_t count_mls(std::size_t n, bool allow_large = false);

  // xF = {xA : A in F}. Throws DomainError on ground-size mismatch.
  SetFamily shift_family(FiniteGroup const& g, Elem x, SetFamily const& f);

  MaximalLinkedSystem shift_mls(FiniteGroup const&         g,
                                Elem                       x,
                                MaximalLinkedSystem const& l);

  // <{x}>
  MaximalLinkedSystem principal_ultrafilter(FiniteGroup const& g, Elem x);

  // {A : 2|A| > |G|}
  SetFamily majority_family(FiniteGroup const& g);
  SetFamily majority_family(std::size_t n);

  // Greedy maximal linked extension of a linked family: walks all subsets in
  // increasing numeric order and adds each one that meets every member so far.
  // Throws DomainError if f is not linked.
  MaximalLinkedSystem extend_to_maximal_linked(SetFamily const& f);

  // "[3,5,6]": mask values of the minimal sets, ascending.
  std::string serialize_family(SetFamily const& f);
  // Inverse of serialize_family. Throws ParseError.
  SetFamily parse_family(std::string_view text, std::size_t ground);

  // Header line then one system per line:
  //   superx-mls v1 ground=<n> group=<name> count=<N>
  std::string serialize_lambda(std::vector<MaximalLinkedSystem> const& systems,
                               std::size_t                             ground,
                               std::string_view                        group);
  std::vector<MaximalLinkedSystem> parse_lambda(std::string_view text);

}  // namespace superx
