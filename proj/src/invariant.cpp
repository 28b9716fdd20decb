#include "superx/invariant.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>

#include "superx/error.hpp"
#include "superx/mls.hpp"
#include "superx/semigroup.hpp"
#include "superx/superextension.hpp"

namespace superx {

  bool is_self_linked(FiniteGroup const& g, Mask a) {
    if (a == 0) {
      throw DomainError("the empty set is not self-linked");
    }
    return g.difference_set(a, a) == g.full();
  }

  std::size_t sl_lower_bound(std::size_t n) {
    std::size_t k = 1;
    while (k * k - k + 1 < n) {
      ++k;
    }
    return k;
  }

  namespace {

    // Sets through e of size k, e being element 0: bit 0 plus a (k-1)-subset
    // of the remaining n-1 points.
    template <typename Pred>
    std::optional<Mask> find_through_identity(std::size_t n,
                                              std::size_t k,
                                              Pred&&      pred) {
      auto const rest = find_k_subset(
          n - 1, k - 1, [&](Mask m) { return pred((m << 1) | 1U); });
      if (!rest) {
        return std::nullopt;
      }
      return (*rest << 1) | 1U;
    }

    std::size_t min_self_linked_in_coset_space(
        std::vector<std::vector<std::size_t>> const& act,
        std::size_t                                  m) {
      auto const translate = [&](std::vector<std::size_t> const& row, Mask a) {
        Mask out = 0;
        for (auto c : elements_of(a)) {
          out |= singleton(row[c]);
        }
        return out;
      };
      auto const self_linked = [&](Mask a) {
        return std::all_of(act.begin(), act.end(), [&](auto const& row) {
          return (a & translate(row, a)) != 0;
        });
      };
      // G acts transitively on cosets, so shifting A to contain coset 0 is
      // harmless.
      for (std::size_t k = 1; k <= m; ++k) {
        if (find_through_identity(m, k, self_linked)) {
          return k;
        }
      }
      throw ConsistencyError("coset space has no self-linked subset");
    }

  }  // namespace

  SelfLinkedMinimum min_self_linked(FiniteGroup const& g) {
    std::size_t const n = g.order();
    for (std::size_t k = sl_lower_bound(n); k <= n; ++k) {
      if (auto a = find_through_identity(
              n, k, [&](Mask m) { return is_self_linked(g, m); })) {
        return {k, *a};
      }
    }
    throw ConsistencyError("G itself is self-linked");
  }

  SlBoundCheck check_slbound_composite(FiniteGroup const& g, Mask h) {
    if (!g.is_subgroup(h)) {
      throw DomainError(mask_to_string(h) + " is not a subgroup of "
                        + g.name());
    }
    std::size_t const n = g.order();
    // Left cosets xH, numbered by first appearance.
    std::vector<std::size_t> coset_of(n, n);
    std::vector<Elem>        reps;
    for (Elem x = 0; x < n; ++x) {
      if (coset_of[x] != n) {
        continue;
      }
      for (auto y : elements_of(g.translate(x, h))) {
        coset_of[y] = reps.size();
      }
      reps.push_back(x);
    }
    std::size_t const                     m = reps.size();
    std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(m));
    for (Elem x = 0; x < n; ++x) {
      for (std::size_t c = 0; c < m; ++c) {
        act[x][c] = coset_of[g.mul(x, reps[c])];
      }
    }
    SlBoundCheck out{};
    out.sl_group       = sl(g);
    out.sl_subgroup    = sl(g.subgroup(h));
    out.sl_quotient    = min_self_linked_in_coset_space(act, m);
    out.subgroup_order = static_cast<std::size_t>(cardinality(h));
    out.index          = m;
    return out;
  }

  namespace {

    void require_even(FiniteGroup const& g) {
      if (g.order() % 2 != 0) {
        throw DomainError(g.name() + " has odd order");
      }
    }

  }  // namespace

  std::vector<Mask> enumerate_half_self_linked(FiniteGroup const& g) {
    require_even(g);
    std::vector<Mask> out;
    for_each_k_subset(g.order(), g.order() / 2, [&](Mask a) {
      if (is_self_linked(g, a)) {
        out.push_back(a);
      }
    });
    return out;
  }

  SimClasses sim_classes(FiniteGroup const& g) {
    auto const        family = enumerate_half_self_linked(g);
    std::size_t const count  = family.size();
    std::map<Mask, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i) {
      index.emplace(family[i], i);
    }

    // B ~ A iff B = xA or B = x(G\A) for some x.
    auto const related = [&](Mask a) {
      std::vector<std::size_t> out;
      for (Elem x = 0; x < g.order(); ++x) {
        for (Mask b : {g.translate(x, a), g.translate(x, g.full() & ~a)}) {
          if (auto it = index.find(b); it != index.end()) {
            out.push_back(it->second);
          }
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };

    std::vector<std::size_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto const find = [&](std::size_t i) {
      while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i         = parent[i];
      }
      return i;
    };
    std::vector<std::vector<std::size_t>> neighbours(count);
    for (std::size_t i = 0; i < count; ++i) {
      neighbours[i] = related(family[i]);
      for (auto j : neighbours[i]) {
        parent[find(j)] = find(i);
      }
    }

    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < count; ++i) {
      by_root[find(i)].push_back(i);
    }
    SimClasses out;
    for (auto const& [root, members] : by_root) {
      // The relation is an equivalence exactly when each set is related to
      // precisely the members of its class.
      for (auto i : members) {
        if (neighbours[i] != members) {
          throw ConsistencyError("~ is not an equivalence relation on S("
                                 + g.name() + ")");
        }
      }
      std::vector<Mask> cls;
      for (auto i : members) {
        cls.push_back(family[i]);
      }
      out.classes.push_back(std::move(cls));
    }
    std::sort(out.classes.begin(), out.classes.end());
    return out;
  }

  namespace {

    // Fixed-width vertex set; the graph has fewer than 2^10 vertices.
    class VertexSet {
     public:
      static constexpr std::size_t kWords = 16;

      void set(std::size_t i) noexcept {
        _w[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      void reset(std::size_t i) noexcept {
        _w[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      }
      bool empty() const noexcept {
        return std::all_of(_w.begin(), _w.end(), [](auto w) { return w == 0; });
      }
      std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : _w) {
          c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
      }
      VertexSet operator&(VertexSet const& o) const noexcept {
        VertexSet r;
        for (std::size_t i = 0; i < kWords; ++i) {
          r._w[i] = _w[i] & o._w[i];
        }
        return r;
      }
      VertexSet without(VertexSet const& o) const noexcept {
        VertexSet r;
        for (std::size_t i = 0; i < kWords; ++i) {
          r._w[i] = _w[i] & ~o._w[i];
        }
        return r;
      }
      VertexSet operator|(VertexSet const& o) const noexcept {
        VertexSet r;
        for (std::size_t i = 0; i < kWords; ++i) {
          r._w[i] = _w[i] | o._w[i];
        }
        return r;
      }
      template <typename F>
      void for_each(F&& f) const {
        for (std::size_t i = 0; i < kWords; ++i) {
          for (auto w = _w[i]; w != 0; w &= w - 1) {
            f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
          }
        }
      }

     private:
      std::array<std::uint64_t, kWords> _w{};
    };

    // Bron-Kerbosch with Tomita pivoting.
    class MaximalCliques {
     public:
      explicit MaximalCliques(std::vector<VertexSet> adjacency)
          : _adj(std::move(adjacency)) {}

      template <typename F>
      void run(VertexSet all, F&& emit) const {
        VertexSet r;
        expand(r, all, VertexSet{}, emit);
      }

     private:
      template <typename F>
      void expand(VertexSet& r, VertexSet p, VertexSet x, F& emit) const {
        if (p.empty()) {
          if (x.empty()) {
            emit(r);
          }
          return;
        }
        std::size_t pivot = 0;
        std::size_t best  = 0;
        bool        first = true;
        (p | x).for_each([&](std::size_t u) {
          std::size_t const c = (p & _adj[u]).count();
          if (first || c > best) {
            pivot = u;
            best  = c;
            first = false;
          }
        });
        p.without(_adj[pivot]).for_each([&](std::size_t v) {
          r.set(v);
          expand(r, p & _adj[v], x & _adj[v], emit);
          r.reset(v);
          p.reset(v);
          x.set(v);
        });
      }

      std::vector<VertexSet> _adj;
    };

  }  // namespace

  std::vector<InvariantLinkedSystem> enumerate_invariant_mls(
      FiniteGroup const& g,
      bool               allow_large) {
    std::size_t const n     = g.order();
    std::size_t const limit
        = allow_large ? kMaxInvariantOrder : kDefaultMaxInvariantOrder;
    if (n > limit) {
      throw CapacityError("invariant systems are enumerated for |G| <= "
                          + std::to_string(limit) + ", got " + g.name());
    }
    std::vector<Mask> vertices;
    for (Mask a = 1; a <= g.full(); ++a) {
      if (is_self_linked(g, a)) {
        vertices.push_back(a);
      }
    }
    std::vector<std::size_t> vertex_of(std::size_t{1} << n, vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      vertex_of[vertices[i]] = i;
    }
    std::vector<VertexSet> adjacency(vertices.size());
    VertexSet              all;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      all.set(i);
      for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (i != j && g.difference_set(vertices[i], vertices[j]) == g.full()) {
          adjacency[i].set(j);
        }
      }
    }

    std::vector<InvariantLinkedSystem> out;
    MaximalCliques(std::move(adjacency)).run(all, [&](VertexSet const& clique) {
      std::vector<bool> in(std::size_t{1} << n, false);
      std::vector<Mask> members;
      clique.for_each([&](std::size_t v) {
        in[vertices[v]] = true;
        members.push_back(vertices[v]);
      });
      for (Mask a : members) {
        for (Elem x = 0; x < n; ++x) {
          if (!in[g.translate(x, a)]) {
            throw ConsistencyError("maximal clique not shift-closed in "
                                   + g.name());
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (!in[a | singleton(i)]) {
            throw ConsistencyError("maximal clique not superset-closed in "
                                   + g.name());
          }
        }
      }
      out.push_back({SetFamily::generate(n, minimal_elements(members))});
    });
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.family < b.family;
    });
    return out;
  }

  std::size_t up_L0_count(FiniteGroup const&                        g,
                          std::vector<InvariantLinkedSystem> const& systems) {
    require_even(g);
    auto const majority = majority_family(g);
    return static_cast<std::size_t>(
        std::count_if(systems.begin(), systems.end(), [&](auto const& s) {
          return std::all_of(majority.minimal_sets().begin(),
                             majority.minimal_sets().end(),
                             [&](Mask a) { return s.family.contains(a); });
        }));
  }

  PartitionCheck partition_condition(FiniteGroup const& g) {
    Mask const full = g.full();
    // A ranges over the sets through e: bit 0 set, the rest free.
    for (Mask rest = 0; rest < (Mask{1} << (g.order() - 1)); ++rest) {
      Mask const a = (rest << 1) | 1U;
      Mask const b = full & ~a;
      if (g.difference_set(a, a) != full
          && (b == 0 || g.difference_set(b, b) != full)) {
        return {false, std::pair{a, b}};
      }
    }
    return {};
  }

  OddEquivalence odd_equivalence_report(FiniteGroup const& g) {
    std::optional<std::size_t> right_zero_count;
    if (g.order() <= kMaxLambdaTableOrder) {
      right_zero_count = right_zeros(build_lambda_table(g).table()).size();
    }
    return odd_equivalence_report(g, right_zero_count);
  }

  OddEquivalence odd_equivalence_report(FiniteGroup const&         g,
                                        std::optional<std::size_t> right_zero_count) {
    if (g.order() > kDefaultMaxInvariantOrder) {
      throw CapacityError("odd-group report is limited to |G| <= 8");
    }
    auto const     systems = enumerate_invariant_mls(g);
    OddEquivalence out{};
    out.invariant_count        = systems.size();
    out.some_invariant_maximal = std::any_of(
        systems.begin(), systems.end(),
        [](auto const& s) { return is_maximal_linked(s.family); });
    out.all_invariant_maximal = std::all_of(
        systems.begin(), systems.end(),
        [](auto const& s) { return is_maximal_linked(s.family); });
    out.partition = partition_condition(g).holds;
    out.odd       = g.is_odd();
    if (right_zero_count) {
      out.right_zero_count = *right_zero_count;
      out.right_zero       = *right_zero_count > 0;
    }
    return out;
  }

}  // namespace superx
