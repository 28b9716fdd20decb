#include "superx/orbit.hpp"

#include <algorithm>
#include <map>

#include "superx/error.hpp"

namespace superx {

  OrbitQuotient orbit_quotient(SemigroupTable const&                  s,
                               std::vector<std::vector<Index>> const& action,
                               std::vector<Index> const& group_elements) {
    constexpr Index kNone = ~Index{0};
    OrbitQuotient   q;
    q.orbit_of.assign(s.size(), kNone);
    for (Index i = 0; i < s.size(); ++i) {
      if (q.orbit_of[i] != kNone) {
        continue;
      }
      auto const orbit = static_cast<Index>(q.orbit_reps.size());
      q.orbit_reps.push_back(i);
      for (auto const& g : action) {
        q.orbit_of[g[i]] = orbit;
      }
    }
    // Orbits of a group action partition the set: each g[i] must have been
    // unvisited or already in the orbit of i.
    for (Index i = 0; i < s.size(); ++i) {
      for (auto const& g : action) {
        if (q.orbit_of[g[i]] != q.orbit_of[i]) {
          throw ConsistencyError("action orbits do not partition the table");
        }
      }
    }

    auto const central = central_elements(s);
    bool const group_central
        = std::all_of(group_elements.begin(), group_elements.end(), [&](Index x) {
            return std::binary_search(central.begin(), central.end(), x);
          });
    if (!group_central) {
      return q;
    }
    std::size_t const  m = q.orbit_count();
    std::vector<Index> product(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        product[a * m + b] = q.orbit_of[s(q.orbit_reps[a], q.orbit_reps[b])];
      }
    }
    for (Index x = 0; x < s.size(); ++x) {
      for (Index y = 0; y < s.size(); ++y) {
        if (product[q.orbit_of[x] * m + q.orbit_of[y]] != q.orbit_of[s(x, y)]) {
          throw ConsistencyError("orbit product depends on the representatives");
        }
      }
    }
    q.product = SemigroupTable(m, std::move(product));
    return q;
  }

  OrbitQuotient orbit_quotient(LambdaTable const& t) {
    std::vector<Index> principal;
    for (Elem x = 0; x < t.group().order(); ++x) {
      principal.push_back(t.principal(x));
    }
    return orbit_quotient(t.table(), t.action(), principal);
  }

  std::size_t count_lambda_orbits(FiniteGroup const& g, bool allow_large) {
    auto const        systems = enumerate_mls(g.order(), allow_large);
    std::size_t       orbits  = 0;
    // Burnside would also do; counting canonical (least) orbit members keeps
    // it independent of the table code.
    for (auto const& l : systems) {
      bool least = true;
      for (Elem x = 1; x < g.order() && least; ++x) {
        least = !(shift_mls(g, x, l) < l);
      }
      orbits += least ? 1 : 0;
    }
    return orbits;
  }

  namespace {

    constexpr Index kNone = ~Index{0};

    class TransversalSearch {
     public:
      TransversalSearch(SemigroupTable const& s, OrbitQuotient const& q)
          : _s(s), _q(q), _members(q.orbit_count()) {
        for (Index i = 0; i < s.size(); ++i) {
          _members[q.orbit_of[i]].push_back(i);
        }
      }

      std::optional<std::vector<Index>> run() {
        std::vector<Index> choice(_q.orbit_count(), kNone);
        if (!search(choice)) {
          return std::nullopt;
        }
        std::sort(_result.begin(), _result.end());
        return _result;
      }

     private:
      // Adds x and everything its products with chosen elements force.
      // Returns false on a same-orbit collision.
      bool add(std::vector<Index>& choice, Index x) const {
        std::vector<Index> queue = {x};
        for (std::size_t head = 0; head < queue.size(); ++head) {
          Index const y     = queue[head];
          Index const orbit = _q.orbit_of[y];
          if (choice[orbit] == y) {
            continue;
          }
          if (choice[orbit] != kNone) {
            return false;
          }
          choice[orbit] = y;
          for (Index z : choice) {
            if (z == kNone) {
              continue;
            }
            queue.push_back(_s(y, z));
            queue.push_back(_s(z, y));
          }
        }
        return true;
      }

      bool search(std::vector<Index>& choice) {
        auto const open = std::find(choice.begin(), choice.end(), kNone);
        if (open == choice.end()) {
          _result = choice;
          return true;
        }
        auto const orbit = static_cast<std::size_t>(open - choice.begin());
        for (Index candidate : _members[orbit]) {
          std::vector<Index> next = choice;
          if (add(next, candidate) && search(next)) {
            return true;
          }
        }
        return false;
      }

      SemigroupTable const&           _s;
      OrbitQuotient const&            _q;
      std::vector<std::vector<Index>> _members;
      std::vector<Index>              _result;
    };

  }  // namespace

  std::optional<std::vector<Index>> transversal_subsemigroup(
      SemigroupTable const& s,
      OrbitQuotient const&  q) {
    return TransversalSearch(s, q).run();
  }

}  // namespace superx
