#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superx/group.hpp"

namespace superx {

  using Index = std::uint32_t;

  // A finite magma given by its Cayley table. Entries are validated to be in
  // range on construction; associativity is checked on demand.
  class SemigroupTable {
   public:
    SemigroupTable() = default;

    // `product[i * n + j]` is the index of i * j. `labels` is empty or has n
    // entries. Throws ConsistencyError on out-of-range entries.
    SemigroupTable(std::size_t              n,
                   std::vector<Index>       product,
                   std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return _n;
    }

    Index operator()(std::size_t i, std::size_t j) const noexcept {
      return _product[i * _n + j];
    }

    std::vector<Index> const& data() const noexcept {
      return _product;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string label(std::size_t i) const;

    // Exhaustive for n <= 100; otherwise `samples` random triples from a
    // fixed seed.
    bool is_associative(std::size_t samples = 100000) const;

    // The subtable on `elements` (in the given order). Throws DomainError if
    // the set is not closed under the product.
    SemigroupTable restrict_to(std::span<Index const> elements) const;

    friend bool operator==(SemigroupTable const& a, SemigroupTable const& b) {
      return a._n == b._n && a._product == b._product;
    }

   private:
    std::size_t              _n = 0;
    std::vector<Index>       _product;
    std::vector<std::string> _labels;
  };

  // The Cayley table of a group.
  SemigroupTable group_table(FiniteGroup const& g);

  // S with a new absorbing element appended (index n).
  SemigroupTable adjoin_zero(SemigroupTable const& s);
  // S with a new two-sided identity appended (index n), even if S already
  // has one.
  SemigroupTable adjoin_identity(SemigroupTable const& s);
  // S x T with (i, j) encoded as i * |T| + j.
  SemigroupTable direct_product(SemigroupTable const& s, SemigroupTable const& t);

  std::vector<Index> idempotents(SemigroupTable const& s);
  // z with x * z = z for every x.
  std::vector<Index> right_zeros(SemigroupTable const& s);
  // z with z * x = z for every x.
  std::vector<Index> left_zeros(SemigroupTable const& s);
  std::optional<Index> zero(SemigroupTable const& s);

  struct Commutativity {
    bool                                 commutative = true;
    // Lexicographically least (i, j) with ij != ji.
    std::optional<std::pair<Index, Index>> witness;
  };

  Commutativity is_commutative(SemigroupTable const& s);

  // S^1 a S^1, sorted.
  std::vector<Index> principal_ideal(SemigroupTable const& s, Index a);

  // The unique minimal two-sided ideal K(S), sorted. Small tables compare all
  // principal ideals; large ones locate an element of K as the product of
  // all elements and then check S^1 k S^1 = K for every k in K. Throws
  // ConsistencyError if minimality or uniqueness fails.
  std::vector<Index> minimal_ideal(SemigroupTable const& s);

  struct MaximalSubgroup {
    Index              identity;
    std::vector<Index> elements;  // sorted
    SemigroupTable     table;     // on `elements`, in that order
  };

  // The group of units of the local monoid eSe. Throws DomainError if e is
  // not idempotent.
  MaximalSubgroup maximal_subgroup_at(SemigroupTable const& s, Index e);

  std::vector<Index> central_elements(SemigroupTable const& s);

  // x with x^4 = x^2, i.e. x^2 idempotent.
  std::vector<Index> sqrt_of_idempotents(SemigroupTable const& s);

  inline constexpr std::size_t kMaxIsomorphismOrder = 16;

  // A bijection f with f(ab) = f(a)f(b), as f[a] for each a in s, or nullopt
  // if none exists. Throws CapacityError above order 16.
  std::optional<std::vector<Index>> find_isomorphism(SemigroupTable const& s,
                                                     SemigroupTable const& t);

}  // namespace superx
