#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "superx/family.hpp"
#include "superx/group.hpp"
#include "superx/mls.hpp"
#include "superx/semigroup.hpp"

namespace superx {

  // A o B = {C : {x : x^{-1}C in B} in A}. Membership is decided for each of
  // the 2^|G| candidate sets and the minimal members are extracted
  // afterwards. Throws DomainError on ground-size mismatch.
  SetFamily circ(FiniteGroup const& g, SetFamily const& a, SetFamily const& b);

  MaximalLinkedSystem circ(FiniteGroup const&         g,
                           MaximalLinkedSystem const& a,
                           MaximalLinkedSystem const& b);

  inline constexpr std::size_t kMaxLambdaTableOrder = 6;

  // lambda(G) with its Cayley table and the left-translation action of G.
  class LambdaTable {
   public:
    // Builds the table row-parallel over `threads` workers (0 = hardware
    // concurrency). Throws CapacityError for |G| > 6.
    static LambdaTable build(FiniteGroup const& g, unsigned threads = 0);

    // Reassembles a table from serialized parts; validates that `elements`
    // is exactly enumerate_mls(|G|) and that the action is consistent.
    static LambdaTable from_parts(FiniteGroup                      g,
                                  std::vector<MaximalLinkedSystem> elements,
                                  SemigroupTable                   table);

    FiniteGroup const& group() const noexcept {
      return _group;
    }

    std::vector<MaximalLinkedSystem> const& elements() const noexcept {
      return _elements;
    }

    SemigroupTable const& table() const noexcept {
      return _table;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::optional<Index> index_of(SetFamily const& f) const;

    Index index_of(MaximalLinkedSystem const& l) const;

    // Index of the principal ultrafilter <{x}>.
    Index principal(Elem x) const {
      return _principal[x];
    }

    // Index of x * elements()[i] under left translation.
    Index shift(Elem x, Index i) const {
      return _action[x][i];
    }

    std::vector<std::vector<Index>> const& action() const noexcept {
      return _action;
    }

   private:
    LambdaTable(FiniteGroup g) : _group(std::move(g)) {}
    void index_elements();

    FiniteGroup                              _group;
    std::vector<MaximalLinkedSystem>         _elements;
    std::vector<std::uint64_t>               _bits;
    std::unordered_map<std::uint64_t, Index> _lookup;
    SemigroupTable                           _table;
    std::vector<Index>                       _principal;
    std::vector<std::vector<Index>>          _action;
  };

  inline LambdaTable build_lambda_table(FiniteGroup const& g,
                                        unsigned           threads = 0) {
    return LambdaTable::build(g, threads);
  }

  // Table serialization: header, one system per line, one product row per
  // line.
  //   superx-table v1 group=<name> order=<N>
  std::string serialize_table(LambdaTable const& t);
  LambdaTable parse_table(std::string_view text);

}  // namespace superx
