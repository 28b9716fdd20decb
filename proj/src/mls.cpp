#include "superx/mls.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "superx/error.hpp"

namespace superx {

  MaximalLinkedSystem::MaximalLinkedSystem(SetFamily f) : _family(std::move(f)) {
    if (!is_maximal_linked(_family)) {
      throw DomainError(_family.to_string() + " is not maximal linked");
    }
  }

  namespace {

    __extension__ using Bits = unsigned __int128;

    constexpr Bits bit(std::size_t i) {
      return Bits{1} << i;
    }

    // Backtracking over complementary pairs {A, X\A}. `in` is kept upward
    // closed and `out` is its image under complementation, so a conflict
    // (in & out) means two disjoint members.
    class MonotoneSelfDualSearch {
     public:
      explicit MonotoneSelfDualSearch(std::size_t n)
          : _n(n), _full(full_mask(n)), _up(), _down(), _pairs() {
        std::size_t const count = std::size_t{1} << n;
        _up.assign(count, 0);
        _down.assign(count, 0);
        for (std::size_t s = 0; s < count; ++s) {
          for (std::size_t t = 0; t < count; ++t) {
            if (is_subset(static_cast<Mask>(s), static_cast<Mask>(t))) {
              _up[s] |= bit(t);
              _down[t] |= bit(s);
            }
          }
        }
        // One representative per pair: the smaller side (by size, then by
        // value), visited smallest first.
        for (Mask a = 0; a <= _full; ++a) {
          Mask const b = _full & ~a;
          if (std::pair(cardinality(a), a) < std::pair(cardinality(b), b)) {
            _pairs.push_back(a);
          }
        }
        std::sort(_pairs.begin(), _pairs.end(), [](Mask a, Mask b) {
          return std::pair(cardinality(a), a) < std::pair(cardinality(b), b);
        });
      }

      template <typename F>
      void run(F&& emit) const {
        recurse(0, 0, 0, emit);
      }

      std::vector<Mask> minimal_members(Bits in) const {
        std::vector<Mask> out;
        for (Mask s = 1; s <= _full; ++s) {
          if (!(in & bit(s))) {
            continue;
          }
          bool is_min = true;
          for (Mask r = s; r != 0 && is_min; r &= r - 1) {
            is_min = !(in & bit(s & ~(r & (~r + 1))));
          }
          if (is_min) {
            out.push_back(s);
          }
        }
        return out;
      }

     private:
      template <typename F>
      void recurse(std::size_t k, Bits in, Bits out, F& emit) const {
        while (k < _pairs.size() && ((in | out) & bit(_pairs[k]))) {
          ++k;
        }
        if (k == _pairs.size()) {
          emit(in);
          return;
        }
        Mask const a = _pairs[k];
        Mask const b = _full & ~a;
        for (auto [yes, no] : {std::pair(a, b), std::pair(b, a)}) {
          Bits const in2  = in | _up[yes];
          Bits const out2 = out | _down[no];
          if ((in2 & out2) == 0) {
            recurse(k + 1, in2, out2, emit);
          }
        }
      }

      std::size_t       _n;
      Mask              _full;
      std::vector<Bits> _up;
      std::vector<Bits> _down;
      std::vector<Mask> _pairs;
    };

    void check_ground(std::size_t n, bool allow_large) {
      if (n == 0) {
        throw DomainError("maximal linked systems need a non-empty ground set");
      }
      std::size_t const limit
          = allow_large ? kMaxMlsGround : kDefaultMaxMlsGround;
      if (n > limit) {
        throw CapacityError(
            "enumerating maximal linked systems on " + std::to_string(n)
            + " points exceeds the limit of " + std::to_string(limit)
            + (allow_large || n > kMaxMlsGround ? "" : " (use allow_large)"));
      }
    }

  }  // namespace

  std::vector<MaximalLinkedSystem> enumerate_mls(std::size_t n,
                                                 bool        allow_large) {
    check_ground(n, allow_large);
    MonotoneSelfDualSearch const     search(n);
    std::vector<MaximalLinkedSystem> out;
    search.run([&](Bits in) {
      out.push_back(
          MaximalLinkedSystem(SetFamily::generate(n, search.minimal_members(in)),
                              MaximalLinkedSystem::Trusted{}));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t count_mls(std::size_t n, bool allow_large) {
    check_ground(n, allow_large);
    std::size_t count = 0;
    MonotoneSelfDualSearch(n).run([&](Bits) { ++count; });
    return count;
  }

  SetFamily shift_family(FiniteGroup const& g, Elem x, SetFamily const& f) {
    if (f.ground_size() != g.order()) {
      throw DomainError("family on " + std::to_string(f.ground_size())
                        + " points shifted by an element of a group of order "
                        + std::to_string(g.order()));
    }
    std::vector<Mask> shifted;
    shifted.reserve(f.minimal_sets().size());
    for (Mask a : f.minimal_sets()) {
      shifted.push_back(g.translate(x, a));
    }
    return SetFamily::generate(f.ground_size(), shifted);
  }

  MaximalLinkedSystem shift_mls(FiniteGroup const&         g,
                                Elem                       x,
                                MaximalLinkedSystem const& l) {
    // Translation is a bijection of the ground set, so maximality survives.
    return MaximalLinkedSystem(shift_family(g, x, l.family()),
                               MaximalLinkedSystem::Trusted{});
  }

  MaximalLinkedSystem principal_ultrafilter(FiniteGroup const& g, Elem x) {
    if (x >= g.order()) {
      throw DomainError("element " + std::to_string(x) + " not in "
                        + g.name());
    }
    return MaximalLinkedSystem(SetFamily::generate(g.order(), {singleton(x)}));
  }

  SetFamily majority_family(std::size_t n) {
    std::vector<Mask> sets;
    for_each_k_subset(n, n / 2 + 1, [&](Mask m) { sets.push_back(m); });
    return SetFamily::generate(n, sets);
  }

  SetFamily majority_family(FiniteGroup const& g) {
    return majority_family(g.order());
  }

  MaximalLinkedSystem extend_to_maximal_linked(SetFamily const& f) {
    if (!is_linked(f)) {
      throw DomainError(f.to_string() + " is not linked");
    }
    std::vector<Mask> gens = f.minimal_sets();
    Mask const        full = full_mask(f.ground_size());
    for (std::uint64_t a = 1; a <= full; ++a) {
      Mask const s = static_cast<Mask>(a);
      bool const present
          = std::any_of(gens.begin(), gens.end(),
                        [s](Mask m) { return is_subset(m, s); });
      if (present) {
        continue;
      }
      bool const meets_all = std::all_of(
          gens.begin(), gens.end(), [s](Mask m) { return (m & s) != 0; });
      if (meets_all) {
        gens.push_back(s);
      }
    }
    return MaximalLinkedSystem(SetFamily::generate(f.ground_size(), gens));
  }

  std::string serialize_family(SetFamily const& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.minimal_sets().size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(f.minimal_sets()[i]);
    }
    out += ']';
    return out;
  }

  SetFamily parse_family(std::string_view text, std::size_t ground) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
      throw ParseError("family must be written [m1,m2,...]: '"
                       + std::string(text) + "'");
    }
    std::vector<Mask> sets;
    std::string_view  body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      auto const       comma = body.find(',');
      std::string_view item  = body.substr(0, comma);
      Mask             value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(),
                                       value);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw ParseError("bad mask '" + std::string(item) + "'");
      }
      sets.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      body.remove_prefix(comma + 1);
    }
    if (!std::is_sorted(sets.begin(), sets.end())
        || std::adjacent_find(sets.begin(), sets.end()) != sets.end()) {
      throw ParseError("family masks must be strictly ascending: '"
                       + std::string(text) + "'");
    }
    try {
      SetFamily f = SetFamily::generate(ground, sets);
      if (f.minimal_sets() != sets) {
        throw ParseError("family masks do not form an antichain: '"
                         + std::string(text) + "'");
      }
      return f;
    } catch (DomainError const& e) {
      throw ParseError(e.what());
    }
  }

  std::string serialize_lambda(std::vector<MaximalLinkedSystem> const& systems,
                               std::size_t                             ground,
                               std::string_view                        group) {
    std::string out = "superx-mls v1 ground=" + std::to_string(ground)
                      + " group=" + std::string(group)
                      + " count=" + std::to_string(systems.size()) + "\n";
    for (auto const& l : systems) {
      out += serialize_family(l.family());
      out += '\n';
    }
    return out;
  }

  std::vector<MaximalLinkedSystem> parse_lambda(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        magic, version, ground_kv, group_kv, count_kv;
    in >> magic >> version >> ground_kv >> group_kv >> count_kv;
    if (magic != "superx-mls" || version != "v1"
        || ground_kv.rfind("ground=", 0) != 0 || group_kv.rfind("group=", 0) != 0
        || count_kv.rfind("count=", 0) != 0) {
      throw ParseError("bad superx-mls header");
    }
    std::size_t ground = 0, count = 0;
    try {
      ground = std::stoul(ground_kv.substr(7));
      count  = std::stoul(count_kv.substr(6));
    } catch (std::exception const&) {
      throw ParseError("bad superx-mls header");
    }
    std::vector<MaximalLinkedSystem> out;
    std::string                      line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      if (line.empty()) {
        continue;
      }
      try {
        out.emplace_back(parse_family(line, ground));
      } catch (DomainError const& e) {
        throw ParseError(e.what());
      }
    }
    if (out.size() != count) {
      throw ParseError("superx-mls count mismatch: header says "
                       + std::to_string(count) + ", found "
                       + std::to_string(out.size()));
    }
    return out;
  }

}  // namespace superx
