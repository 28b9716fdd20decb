#include "superx/semigroup.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "superx/error.hpp"

namespace superx {

  SemigroupTable::SemigroupTable(std::size_t              n,
                                 std::vector<Index>       product,
                                 std::vector<std::string> labels)
      : _n(n), _product(std::move(product)), _labels(std::move(labels)) {
    if (_product.size() != n * n) {
      throw ConsistencyError("Cayley table has " + std::to_string(_product.size())
                             + " entries, expected "
                             + std::to_string(n * n));
    }
    if (!_labels.empty() && _labels.size() != n) {
      throw ConsistencyError("Cayley table label count does not match its order");
    }
    for (Index v : _product) {
      if (v >= n) {
        throw ConsistencyError("Cayley table entry out of range");
      }
    }
  }

  std::string SemigroupTable::label(std::size_t i) const {
    return _labels.empty() ? std::to_string(i) : _labels[i];
  }

  bool SemigroupTable::is_associative(std::size_t samples) const {
    auto const& t = *this;
    if (_n <= 100) {
      for (std::size_t x = 0; x < _n; ++x) {
        for (std::size_t y = 0; y < _n; ++y) {
          Index const xy = t(x, y);
          for (std::size_t z = 0; z < _n; ++z) {
            if (t(xy, z) != t(x, t(y, z))) {
              return false;
            }
          }
        }
      }
      return true;
    }
    std::mt19937_64                            rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, _n - 1);
    for (std::size_t k = 0; k < samples; ++k) {
      std::size_t const x = pick(rng), y = pick(rng), z = pick(rng);
      if (t(t(x, y), z) != t(x, t(y, z))) {
        return false;
      }
    }
    return true;
  }

  SemigroupTable SemigroupTable::restrict_to(std::span<Index const> elements) const {
    std::vector<Index> position(_n, static_cast<Index>(_n));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      position[elements[i]] = static_cast<Index>(i);
    }
    std::vector<Index>       product;
    std::vector<std::string> labels;
    product.reserve(elements.size() * elements.size());
    for (Index a : elements) {
      for (Index b : elements) {
        Index const p = position[(*this)(a, b)];
        if (p == _n) {
          throw DomainError("subset is not closed under the product");
        }
        product.push_back(p);
      }
      if (!_labels.empty()) {
        labels.push_back(_labels[a]);
      }
    }
    return SemigroupTable(elements.size(), std::move(product), std::move(labels));
  }

  SemigroupTable group_table(FiniteGroup const& g) {
    std::vector<Index> product;
    product.reserve(g.order() * g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        product.push_back(g.mul(x, y));
      }
    }
    return SemigroupTable(g.order(), std::move(product));
  }

  namespace {

    SemigroupTable adjoin(SemigroupTable const& s, bool as_zero) {
      std::size_t const  n = s.size();
      std::vector<Index> product;
      product.reserve((n + 1) * (n + 1));
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
          if (i < n && j < n) {
            product.push_back(s(i, j));
          } else if (as_zero) {
            product.push_back(static_cast<Index>(n));
          } else {
            product.push_back(static_cast<Index>(i == n ? j : i));
          }
        }
      }
      std::vector<std::string> labels;
      if (!s.labels().empty()) {
        labels = s.labels();
        labels.push_back(as_zero ? "0" : "1");
      }
      return SemigroupTable(n + 1, std::move(product), std::move(labels));
    }

  }  // namespace

  SemigroupTable adjoin_zero(SemigroupTable const& s) {
    return adjoin(s, true);
  }

  SemigroupTable adjoin_identity(SemigroupTable const& s) {
    return adjoin(s, false);
  }

  SemigroupTable direct_product(SemigroupTable const& s, SemigroupTable const& t) {
    std::size_t const  m = t.size();
    std::size_t const  n = s.size() * m;
    std::vector<Index> product;
    product.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        product.push_back(
            static_cast<Index>(s(x / m, y / m) * m + t(x % m, y % m)));
      }
    }
    return SemigroupTable(n, std::move(product));
  }

  std::vector<Index> idempotents(SemigroupTable const& s) {
    std::vector<Index> out;
    for (Index i = 0; i < s.size(); ++i) {
      if (s(i, i) == i) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<Index> right_zeros(SemigroupTable const& s) {
    std::vector<Index> out;
    for (Index z = 0; z < s.size(); ++z) {
      bool ok = true;
      for (std::size_t x = 0; x < s.size() && ok; ++x) {
        ok = s(x, z) == z;
      }
      if (ok) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::vector<Index> left_zeros(SemigroupTable const& s) {
    std::vector<Index> out;
    for (Index z = 0; z < s.size(); ++z) {
      bool ok = true;
      for (std::size_t x = 0; x < s.size() && ok; ++x) {
        ok = s(z, x) == z;
      }
      if (ok) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::optional<Index> zero(SemigroupTable const& s) {
    auto const right = right_zeros(s);
    auto const left  = left_zeros(s);
    for (Index z : right) {
      if (std::binary_search(left.begin(), left.end(), z)) {
        return z;
      }
    }
    return std::nullopt;
  }

  Commutativity is_commutative(SemigroupTable const& s) {
    for (Index i = 0; i < s.size(); ++i) {
      for (Index j = i + 1; j < s.size(); ++j) {
        if (s(i, j) != s(j, i)) {
          return {false, std::pair(i, j)};
        }
      }
    }
    return {};
  }

  std::vector<Index> principal_ideal(SemigroupTable const& s, Index a) {
    std::vector<char>  seen(s.size(), 0);
    std::vector<Index> queue = {a};
    seen[a]                  = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Index const x = queue[head];
      for (Index y = 0; y < s.size(); ++y) {
        for (Index p : {s(x, y), s(y, x)}) {
          if (!seen[p]) {
            seen[p] = 1;
            queue.push_back(p);
          }
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  namespace {

    constexpr std::size_t kExhaustiveIdealLimit = 200;

    // True iff target lies in S^1 k S^1, searching outward from k.
    bool reaches(SemigroupTable const& s, Index k, Index target) {
      std::vector<char>  seen(s.size(), 0);
      std::vector<Index> queue = {k};
      seen[k]                  = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Index const x = queue[head];
        if (x == target) {
          return true;
        }
        for (Index y = 0; y < s.size(); ++y) {
          for (Index p : {s(x, y), s(y, x)}) {
            if (!seen[p]) {
              if (p == target) {
                return true;
              }
              seen[p] = 1;
              queue.push_back(p);
            }
          }
        }
      }
      return false;
    }

  }  // namespace

  std::vector<Index> minimal_ideal(SemigroupTable const& s) {
    if (s.size() == 0) {
      throw DomainError("the empty table has no minimal ideal");
    }
    if (s.size() <= kExhaustiveIdealLimit) {
      std::vector<std::vector<Index>> ideals;
      for (Index a = 0; a < s.size(); ++a) {
        ideals.push_back(principal_ideal(s, a));
      }
      std::vector<std::vector<Index>> minimal;
      for (auto const& i : ideals) {
        bool const has_smaller = std::any_of(
            ideals.begin(), ideals.end(), [&i](auto const& j) {
              return j.size() < i.size()
                     && std::includes(i.begin(), i.end(), j.begin(), j.end());
            });
        if (!has_smaller
            && std::find(minimal.begin(), minimal.end(), i) == minimal.end()) {
          minimal.push_back(i);
        }
      }
      if (minimal.size() != 1) {
        throw ConsistencyError("found " + std::to_string(minimal.size())
                               + " inclusion-minimal principal ideals");
      }
      return minimal.front();
    }
    // One factor of the product of all elements lies in K, so the product
    // does too.
    Index z = 0;
    for (Index a = 1; a < s.size(); ++a) {
      z = s(z, a);
    }
    auto const k = principal_ideal(s, z);
    for (Index x : k) {
      if (!reaches(s, x, z)) {
        throw ConsistencyError("principal ideal of the full product is not "
                               "minimal");
      }
    }
    return k;
  }

  MaximalSubgroup maximal_subgroup_at(SemigroupTable const& s, Index e) {
    if (e >= s.size() || s(e, e) != e) {
      throw DomainError("element " + std::to_string(e) + " is not idempotent");
    }
    std::vector<Index> local;
    for (Index x = 0; x < s.size(); ++x) {
      if (s(e, x) == x && s(x, e) == x) {
        local.push_back(x);
      }
    }
    std::vector<Index> units;
    for (Index x : local) {
      bool const invertible
          = std::any_of(local.begin(), local.end(), [&](Index y) {
              return s(x, y) == e && s(y, x) == e;
            });
      if (invertible) {
        units.push_back(x);
      }
    }
    SemigroupTable table = s.restrict_to(units);
    return {e, std::move(units), std::move(table)};
  }

  std::vector<Index> central_elements(SemigroupTable const& s) {
    std::vector<Index> out;
    for (Index c = 0; c < s.size(); ++c) {
      bool ok = true;
      for (Index x = 0; x < s.size() && ok; ++x) {
        ok = s(c, x) == s(x, c);
      }
      if (ok) {
        out.push_back(c);
      }
    }
    return out;
  }

  std::vector<Index> sqrt_of_idempotents(SemigroupTable const& s) {
    std::vector<Index> out;
    for (Index x = 0; x < s.size(); ++x) {
      Index const sq = s(x, x);
      if (s(sq, sq) == sq) {
        out.push_back(x);
      }
    }
    return out;
  }

  namespace {

    using Signature = std::tuple<bool,
                                 std::size_t,
                                 std::size_t,
                                 std::size_t,
                                 std::size_t,
                                 std::size_t,
                                 std::size_t,
                                 std::size_t,
                                 std::size_t>;

    // Isomorphism-invariant data of one element.
    Signature signature(SemigroupTable const& s, Index x) {
      // index and period of the monogenic subsemigroup <x>
      std::vector<Index> powers = {x};
      std::size_t        index = 0, period = 0;
      while (true) {
        Index const next = s(powers.back(), x);
        auto const  it   = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
          index  = static_cast<std::size_t>(it - powers.begin()) + 1;
          period = powers.size() + 1 - index;
          break;
        }
        powers.push_back(next);
      }
      std::size_t fixes_left = 0, fixes_right = 0, absorbs_left = 0,
                  absorbs_right = 0, commutes = 0, roots = 0;
      for (Index y = 0; y < s.size(); ++y) {
        fixes_left += s(x, y) == y;
        fixes_right += s(y, x) == y;
        absorbs_left += s(x, y) == x;
        absorbs_right += s(y, x) == x;
        commutes += s(x, y) == s(y, x);
        roots += s(y, y) == x;
      }
      return {s(x, x) == x, index,         period,    fixes_left, fixes_right,
              absorbs_left, absorbs_right, commutes,  roots};
    }

    class IsomorphismSearch {
     public:
      IsomorphismSearch(SemigroupTable const& s, SemigroupTable const& t)
          : _s(s), _t(t), _map(s.size(), kUnset), _used(t.size(), 0) {
        for (Index x = 0; x < s.size(); ++x) {
          _sig_s.push_back(signature(s, x));
          _sig_t.push_back(signature(t, x));
        }
        // Visit elements from the rarest signature class outward.
        std::map<Signature, std::size_t> freq;
        for (auto const& sig : _sig_s) {
          ++freq[sig];
        }
        for (Index x = 0; x < s.size(); ++x) {
          _order.push_back(x);
        }
        std::stable_sort(_order.begin(), _order.end(), [&](Index a, Index b) {
          return freq[_sig_s[a]] < freq[_sig_s[b]];
        });
      }

      bool invariants_agree() const {
        auto a = _sig_s, b = _sig_t;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
      }

      std::optional<std::vector<Index>> run() {
        if (!invariants_agree()) {
          return std::nullopt;
        }
        if (search(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      static constexpr Index kUnset = ~Index{0};

      bool consistent(Index x) const {
        for (Index a = 0; a < _s.size(); ++a) {
          if (_map[a] == kUnset) {
            continue;
          }
          for (Index b = 0; b < _s.size(); ++b) {
            if (_map[b] == kUnset || (a != x && b != x && _s(a, b) != x)) {
              continue;
            }
            Index const p = _s(a, b);
            if (_map[p] != kUnset && _map[p] != _t(_map[a], _map[b])) {
              return false;
            }
          }
        }
        return true;
      }

      bool search(std::size_t depth) {
        if (depth == _order.size()) {
          return true;
        }
        Index const x = _order[depth];
        for (Index y = 0; y < _t.size(); ++y) {
          if (_used[y] || _sig_t[y] != _sig_s[x]) {
            continue;
          }
          _map[x]  = y;
          _used[y] = 1;
          if (consistent(x) && search(depth + 1)) {
            return true;
          }
          _map[x]  = kUnset;
          _used[y] = 0;
        }
        return false;
      }

      SemigroupTable const&  _s;
      SemigroupTable const&  _t;
      std::vector<Index>     _map;
      std::vector<char>      _used;
      std::vector<Signature> _sig_s;
      std::vector<Signature> _sig_t;
      std::vector<Index>     _order;
    };

  }  // namespace

  std::optional<std::vector<Index>> find_isomorphism(SemigroupTable const& s,
                                                     SemigroupTable const& t) {
    if (s.size() > kMaxIsomorphismOrder || t.size() > kMaxIsomorphismOrder) {
      throw CapacityError("isomorphism search is limited to order 16");
    }
    if (s.size() != t.size()) {
      return std::nullopt;
    }
    return IsomorphismSearch(s, t).run();
  }

}  // namespace superx
