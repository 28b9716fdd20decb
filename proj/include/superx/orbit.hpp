#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superx/semigroup.hpp"
#include "superx/superextension.hpp"

namespace superx {

  // The orbit space S/G of lambda(G) under left translation.
  struct OrbitQuotient {
    std::vector<Index> orbit_reps;  // smallest element index of each orbit
    std::vector<Index> orbit_of;    // element -> orbit number
    // Present only when every principal ultrafilter is central, in which
    // case S/G inherits a semigroup operation.
    std::optional<SemigroupTable> product;

    std::size_t orbit_count() const noexcept {
      return orbit_reps.size();
    }
  };

  // Orbits of an action given as action[g][i] on a table s. `group_elements`
  // are the indices in s of the acting elements, used for the centrality test
  // that decides whether the quotient product is filled. Throws
  // ConsistencyError if the quotient product depends on representatives.
  OrbitQuotient orbit_quotient(SemigroupTable const&                  s,
                               std::vector<std::vector<Index>> const& action,
                               std::vector<Index> const&              group_elements);

  OrbitQuotient orbit_quotient(LambdaTable const& t);

  // Number of orbits of G on lambda(G), computed from the enumerated systems
  // without building the Cayley table (|G| <= 7 with allow_large).
  std::size_t count_lambda_orbits(FiniteGroup const& g, bool allow_large = false);

  // A subsemigroup meeting every orbit exactly once, sorted, or nullopt if
  // none exists.
  std::optional<std::vector<Index>> transversal_subsemigroup(
      SemigroupTable const& s,
      OrbitQuotient const&  q);

  inline std::optional<std::vector<Index>> transversal_subsemigroup(
      LambdaTable const& t) {
    return transversal_subsemigroup(t.table(), orbit_quotient(t));
  }

}  // namespace superx
