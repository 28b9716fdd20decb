#include "superx/oracle/brute_force.hpp"

#include <algorithm>
#include <stdexcept>

namespace superx::oracle {

  namespace {

    bool member(Antichain const& f, Mask a) {
      return std::any_of(f.begin(), f.end(),
                         [&](Mask m) { return (m & ~a) == 0; });
    }

    Antichain minimal_of(std::vector<Mask> sets) {
      Antichain out;
      for (Mask a : sets) {
        bool minimal = true;
        for (Mask b : sets) {
          if (b != a && (b & ~a) == 0) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          out.push_back(a);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

  }  // namespace

  Mask difference_set(FiniteGroup const& g, Mask a, Mask b) {
    Mask out = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        if (has(a, x) && has(b, y)) {
          out |= singleton(g.mul(x, g.inv(y)));
        }
      }
    }
    return out;
  }

  Mask translate(FiniteGroup const& g, Elem x, Mask a) {
    Mask out = 0;
    for (Elem y = 0; y < g.order(); ++y) {
      if (has(a, y)) {
        out |= singleton(g.mul(x, y));
      }
    }
    return out;
  }

  Antichain transversal(std::size_t n, Antichain const& f) {
    std::vector<Mask> hitting;
    for (Mask a = 0; a < (Mask{1} << n); ++a) {
      if (std::all_of(f.begin(), f.end(), [&](Mask m) { return (a & m) != 0; })) {
        hitting.push_back(a);
      }
    }
    return minimal_of(std::move(hitting));
  }

  std::vector<Antichain> all_antichains(std::size_t n) {
    if (n > 4) {
      throw std::invalid_argument("antichain oracle is limited to n <= 4");
    }
    std::size_t const      subsets = (std::size_t{1} << n) - 1;  // non-empty
    std::vector<Antichain> out;
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << subsets); ++pick) {
      Antichain f;
      for (std::size_t i = 0; i < subsets; ++i) {
        if ((pick >> i) & 1U) {
          f.push_back(static_cast<Mask>(i + 1));
        }
      }
      if (minimal_of(f) == f) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  std::vector<Antichain> maximal_linked_systems(std::size_t n) {
    std::vector<Antichain> out;
    for (auto& f : all_antichains(n)) {
      if (transversal(n, f) == f) {
        out.push_back(std::move(f));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Antichain> invariant_linked_systems(FiniteGroup const& g) {
    std::size_t const n = g.order();
    if (n > 5) {
      throw std::invalid_argument("invariant-system oracle is limited to |G| <= 5");
    }
    // Shift orbits of the non-empty subsets.
    std::vector<std::vector<Mask>> orbits;
    std::vector<bool>              seen(std::size_t{1} << n, false);
    for (Mask a = 1; a < (Mask{1} << n); ++a) {
      if (seen[a]) {
        continue;
      }
      std::vector<Mask> orbit;
      for (Elem x = 0; x < n; ++x) {
        Mask const b = translate(g, x, a);
        if (!seen[b]) {
          seen[b] = true;
          orbit.push_back(b);
        }
      }
      orbits.push_back(std::move(orbit));
    }
    if (orbits.size() > 24) {
      throw std::logic_error("too many orbits for the oracle");
    }
    std::vector<std::uint32_t> linked;
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << orbits.size());
         ++pick) {
      std::vector<Mask> members;
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        if ((pick >> i) & 1U) {
          members.insert(members.end(), orbits[i].begin(), orbits[i].end());
        }
      }
      bool ok = true;
      for (Mask a : members) {
        for (Mask b : members) {
          if ((a & b) == 0) {
            ok = false;
          }
        }
      }
      if (ok) {
        linked.push_back(pick);
      }
    }
    std::vector<Antichain> out;
    for (auto pick : linked) {
      bool const maximal
          = std::none_of(linked.begin(), linked.end(), [&](std::uint32_t other) {
              return other != pick && (pick & ~other) == 0;
            });
      if (!maximal) {
        continue;
      }
      std::vector<Mask> members;
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        if ((pick >> i) & 1U) {
          members.insert(members.end(), orbits[i].begin(), orbits[i].end());
        }
      }
      out.push_back(minimal_of(std::move(members)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t sl(FiniteGroup const& g) {
    std::size_t best = g.order();
    for (Mask a = 1; a <= full_mask(g.order()); ++a) {
      auto const size = static_cast<std::size_t>(cardinality(a));
      if (size < best && difference_set(g, a, a) == full_mask(g.order())) {
        best = size;
      }
    }
    return best;
  }

  bool circ_contains(FiniteGroup const& g,
                     Antichain const&   a,
                     Antichain const&   b,
                     Mask               c) {
    Mask witnesses = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      // x^{-1}C = {y : xy in C}
      Mask preimage = 0;
      for (Elem y = 0; y < g.order(); ++y) {
        if (has(c, g.mul(x, y))) {
          preimage |= singleton(y);
        }
      }
      if (member(b, preimage)) {
        witnesses |= singleton(x);
      }
    }
    return member(a, witnesses);
  }

  std::size_t element_order(FiniteGroup const& g, Elem x) {
    Elem        power = x;
    std::size_t k     = 1;
    while (power != FiniteGroup::identity) {
      power = g.mul(power, x);
      ++k;
    }
    return k;
  }

  std::vector<Mask> subgroups(FiniteGroup const& g) {
    std::vector<Mask> out;
    for (Mask h = 1; h <= full_mask(g.order()); ++h) {
      if (!has(h, FiniteGroup::identity)) {
        continue;
      }
      bool closed = true;
      for (Elem x = 0; x < g.order() && closed; ++x) {
        for (Elem y = 0; y < g.order() && closed; ++y) {
          if (has(h, x) && has(h, y) && !has(h, g.mul(x, g.inv(y)))) {
            closed = false;
          }
        }
      }
      if (closed) {
        out.push_back(h);
      }
    }
    return out;
  }

}  // namespace superx::oracle
