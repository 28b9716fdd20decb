#include "superx/family.hpp"

#include <algorithm>

#include "superx/error.hpp"

namespace superx {

  std::vector<Mask> minimal_elements(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
      return std::pair(cardinality(a), a) < std::pair(cardinality(b), b);
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> kept;
    for (Mask s : sets) {
      bool const dominated = std::any_of(
          kept.begin(), kept.end(), [s](Mask k) { return is_subset(k, s); });
      if (!dominated) {
        kept.push_back(s);
      }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  SetFamily SetFamily::generate(std::size_t ground, std::span<Mask const> sets) {
    if (ground > kMaxGround) {
      throw CapacityError("ground set of size " + std::to_string(ground)
                          + " > 16");
    }
    if (sets.empty()) {
      throw DomainError("cannot generate a family from no sets");
    }
    for (Mask s : sets) {
      if (s == 0) {
        throw DomainError("families consist of non-empty sets");
      }
      if (!is_subset(s, full_mask(ground))) {
        throw DomainError("set " + mask_to_string(s)
                          + " is outside the ground set of size "
                          + std::to_string(ground));
      }
    }
    return SetFamily(ground, minimal_elements({sets.begin(), sets.end()}));
  }

  SetFamily SetFamily::from_predicate(std::size_t                      ground,
                                      std::function<bool(Mask)> const& member) {
    if (ground > kMaxGround) {
      throw CapacityError("ground set of size " + std::to_string(ground)
                          + " > 16");
    }
    std::vector<char> in(std::size_t{1} << ground);
    for (std::size_t a = 0; a < in.size(); ++a) {
      in[a] = member(static_cast<Mask>(a)) ? 1 : 0;
    }
    std::vector<Mask> minimal;
    for (std::size_t a = 0; a < in.size(); ++a) {
      if (!in[a]) {
        continue;
      }
      bool is_min = true;
      for (Mask b = static_cast<Mask>(a); b != 0 && is_min; b &= b - 1) {
        is_min = !in[a & ~(b & (~b + 1))];
      }
      if (is_min) {
        minimal.push_back(static_cast<Mask>(a));
      }
    }
    return generate(ground, minimal);
  }

  bool SetFamily::contains(Mask a) const noexcept {
    return std::any_of(_minimal.begin(), _minimal.end(),
                       [a](Mask m) { return is_subset(m, a); });
  }

  std::string SetFamily::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < _minimal.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += mask_to_string(_minimal[i]);
    }
    out += '>';
    return out;
  }

  SetFamily generate_family(std::size_t ground, std::span<Mask const> sets) {
    return SetFamily::generate(ground, sets);
  }

  SetFamily transversal(SetFamily const& f) {
    // Berge's algorithm: fold the minimal sets in one at a time, keeping the
    // minimal hitting sets of the prefix.
    std::vector<Mask> hitting = {0};
    for (Mask edge : f.minimal_sets()) {
      std::vector<Mask> next;
      for (Mask t : hitting) {
        if ((t & edge) != 0) {
          next.push_back(t);
        } else {
          for (Mask e = edge; e != 0; e &= e - 1) {
            next.push_back(t | (e & (~e + 1)));
          }
        }
      }
      hitting = minimal_elements(std::move(next));
    }
    return SetFamily::generate(f.ground_size(), hitting);
  }

  bool is_linked(SetFamily const& f) {
    auto const& m = f.minimal_sets();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i; j < m.size(); ++j) {
        if ((m[i] & m[j]) == 0) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_maximal_linked(SetFamily const& f) {
    return transversal(f) == f;
  }

  std::uint64_t membership_bits(SetFamily const& f) {
    if (f.ground_size() > 6) {
      throw CapacityError("membership bitmaps need a ground set of size <= 6");
    }
    std::uint64_t bits = 0;
    for (Mask a = 0; a < (Mask{1} << f.ground_size()); ++a) {
      if (f.contains(a)) {
        bits |= std::uint64_t{1} << a;
      }
    }
    return bits;
  }

}  // namespace superx
