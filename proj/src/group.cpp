#include "superx/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "superx/error.hpp"

namespace superx {

  FiniteGroup::FiniteGroup(std::string                           name,
                           std::vector<std::vector<Elem>> const& table)
      : _name(std::move(name)), _order(table.size()), _mul(), _inv() {
    if (_order == 0) {
      throw ConsistencyError("group " + _name + ": empty multiplication table");
    }
    if (_order > kMaxGroupOrder) {
      throw CapacityError("group " + _name + " has order "
                          + std::to_string(_order) + " > 16");
    }
    _mul.reserve(_order * _order);
    for (auto const& row : table) {
      if (row.size() != _order) {
        throw ConsistencyError("group " + _name + ": table is not square");
      }
      for (auto v : row) {
        if (v >= _order) {
          throw ConsistencyError("group " + _name + ": entry out of range");
        }
        _mul.push_back(v);
      }
    }
    for (Elem x = 0; x < _order; ++x) {
      if (mul(identity, x) != x || mul(x, identity) != x) {
        throw ConsistencyError("group " + _name + ": 0 is not the identity");
      }
    }
    for (Elem x = 0; x < _order; ++x) {
      for (Elem y = 0; y < _order; ++y) {
        for (Elem z = 0; z < _order; ++z) {
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw ConsistencyError("group " + _name
                                   + ": multiplication is not associative");
          }
        }
      }
    }
    _inv.assign(_order, 0);
    for (Elem x = 0; x < _order; ++x) {
      std::size_t found = 0;
      for (Elem y = 0; y < _order; ++y) {
        if (mul(x, y) == identity) {
          if (mul(y, x) != identity) {
            throw ConsistencyError("group " + _name
                                   + ": one-sided inverse found");
          }
          _inv[x] = y;
          ++found;
        }
      }
      if (found != 1) {
        throw ConsistencyError("group " + _name
                               + ": element without a unique inverse");
      }
    }
  }

  std::size_t FiniteGroup::element_order(Elem x) const {
    std::size_t k = 1;
    for (Elem p = x; p != identity; p = mul(p, x)) {
      ++k;
    }
    return k;
  }

  bool FiniteGroup::is_odd() const {
    for (Elem x = 0; x < _order; ++x) {
      if (element_order(x) % 2 == 0) {
        return false;
      }
    }
    return true;
  }

  Mask FiniteGroup::translate(Elem x, Mask a) const noexcept {
    Mask out = 0;
    for (; a != 0; a &= a - 1) {
      out |= singleton(mul(x, static_cast<Elem>(std::countr_zero(a))));
    }
    return out;
  }

  Mask FiniteGroup::translate_inverse(Elem x, Mask a) const noexcept {
    return translate(inv(x), a);
  }

  Mask FiniteGroup::right_translate(Mask a, Elem x) const noexcept {
    Mask out = 0;
    for (; a != 0; a &= a - 1) {
      out |= singleton(mul(static_cast<Elem>(std::countr_zero(a)), x));
    }
    return out;
  }

  Mask FiniteGroup::inverse_set(Mask a) const noexcept {
    Mask out = 0;
    for (; a != 0; a &= a - 1) {
      out |= singleton(inv(static_cast<Elem>(std::countr_zero(a))));
    }
    return out;
  }

  Mask FiniteGroup::product_set(Mask a, Mask b) const noexcept {
    Mask out = 0;
    for (; b != 0; b &= b - 1) {
      out |= right_translate(a, static_cast<Elem>(std::countr_zero(b)));
    }
    return out;
  }

  Mask FiniteGroup::difference_set(Mask a, Mask b) const noexcept {
    return product_set(a, inverse_set(b));
  }

  bool FiniteGroup::is_subgroup(Mask h) const noexcept {
    return has(h, identity) && difference_set(h, h) == h;
  }

  std::vector<Mask> FiniteGroup::subgroups() const {
    std::vector<Mask> out;
    // Every subgroup contains e, so only masks with bit 0 set are candidates.
    for (std::uint64_t m = 1; m <= full(); m += 2) {
      if (is_subgroup(static_cast<Mask>(m))) {
        out.push_back(static_cast<Mask>(m));
      }
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
      return std::pair(cardinality(a), a) < std::pair(cardinality(b), b);
    });
    return out;
  }

  FiniteGroup FiniteGroup::subgroup(Mask h) const {
    if (!is_subgroup(h)) {
      throw DomainError(mask_to_string(h) + " is not a subgroup of " + _name);
    }
    auto const             members = elements_of(h);
    std::vector<Elem>      position(_order, 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      position[members[i]] = static_cast<Elem>(i);
    }
    std::vector<std::vector<Elem>> t(members.size(),
                                     std::vector<Elem>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        t[i][j] = position[mul(static_cast<Elem>(members[i]),
                               static_cast<Elem>(members[j]))];
      }
    }
    return FiniteGroup(_name + "|" + mask_to_string(h), t);
  }

  std::vector<std::vector<Elem>> FiniteGroup::table() const {
    std::vector<std::vector<Elem>> t(_order, std::vector<Elem>(_order));
    for (Elem x = 0; x < _order; ++x) {
      for (Elem y = 0; y < _order; ++y) {
        t[x][y] = mul(x, y);
      }
    }
    return t;
  }

  namespace {

    using Table = std::vector<std::vector<Elem>>;

    Table cyclic_table(std::size_t n) {
      Table t(n, std::vector<Elem>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          t[i][j] = static_cast<Elem>((i + j) % n);
        }
      }
      return t;
    }

    Table direct_product_table(Table const& g, Table const& h) {
      std::size_t const m = h.size();
      std::size_t const n = g.size() * m;
      Table             t(n, std::vector<Elem>(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          t[x][y] = static_cast<Elem>(g[x / m][y / m] * m + h[x % m][y % m]);
        }
      }
      return t;
    }

    Table dihedral_table(std::size_t n) {
      // r^a -> a, s r^a -> n + a, with r^a s = s r^{-a}.
      Table t(2 * n, std::vector<Elem>(2 * n));
      for (std::size_t x = 0; x < 2 * n; ++x) {
        for (std::size_t y = 0; y < 2 * n; ++y) {
          bool const        xs = x >= n, ys = y >= n;
          std::size_t const a = x % n, b = y % n;
          std::size_t const rot
              = ys ? (b + n - a) % n : (a + b) % n;  // exponent of r
          t[x][y] = static_cast<Elem>(((xs != ys) ? n : 0) + rot);
        }
      }
      return t;
    }

    Table quaternion_table() {
      // Units 1, i, j, k as 0..3; element index = 2 * unit + (negative ? 1 : 0).
      constexpr std::array<std::array<int, 4>, 4> unit = {{{0, 1, 2, 3},
                                                           {1, 0, 3, 2},
                                                           {2, 3, 0, 1},
                                                           {3, 2, 1, 0}}};
      constexpr std::array<std::array<int, 4>, 4> sign
          = {{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}}};
      Table t(8, std::vector<Elem>(8));
      for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
          int const u = x / 2, v = y / 2;
          int       s = sign[u][v];
          if (x % 2 != y % 2) {
            s = -s;
          }
          t[x][y] = static_cast<Elem>(2 * unit[u][v] + (s < 0 ? 1 : 0));
        }
      }
      return t;
    }

    Table alternating4_table() {
      std::vector<std::array<int, 4>> perms;
      std::array<int, 4>              p = {0, 1, 2, 3};
      do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) {
            inversions += p[i] > p[j] ? 1 : 0;
          }
        }
        if (inversions % 2 == 0) {
          perms.push_back(p);
        }
      } while (std::next_permutation(p.begin(), p.end()));
      Table t(perms.size(), std::vector<Elem>(perms.size()));
      for (std::size_t x = 0; x < perms.size(); ++x) {
        for (std::size_t y = 0; y < perms.size(); ++y) {
          std::array<int, 4> c{};
          for (int i = 0; i < 4; ++i) {
            c[i] = perms[x][perms[y][i]];  // (xy)(i) = x(y(i))
          }
          auto it = std::find(perms.begin(), perms.end(), c);
          t[x][y] = static_cast<Elem>(it - perms.begin());
        }
      }
      return t;
    }

    Table dicyclic12_table() {
      // a^i b^j * a^k b^l = a^{i+k} b^{(-1)^k j + l}
      Table t(12, std::vector<Elem>(12));
      for (int x = 0; x < 12; ++x) {
        for (int y = 0; y < 12; ++y) {
          int const i = x / 3, j = x % 3, k = y / 3, l = y % 3;
          int const jj = (k % 2 == 0) ? j : (3 - j) % 3;
          t[x][y]      = static_cast<Elem>(((i + k) % 4) * 3 + (jj + l) % 3);
        }
      }
      return t;
    }

    std::size_t parse_number(std::string_view s, std::string_view spec) {
      std::size_t n   = 0;
      auto [ptr, ec]  = std::from_chars(s.data(), s.data() + s.size(), n);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("unknown group name '" + std::string(spec) + "'");
      }
      return n;
    }

    void check_order(std::size_t n, std::string_view spec) {
      if (n == 0) {
        throw ParseError("group '" + std::string(spec) + "' has order 0");
      }
      if (n > kMaxGroupOrder) {
        throw CapacityError("group '" + std::string(spec) + "' has order "
                            + std::to_string(n) + " > 16");
      }
    }

    std::vector<std::string_view> split_factors(std::string_view s) {
      std::vector<std::string_view> parts;
      std::size_t                   start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == 'x') {
          parts.push_back(s.substr(start, i - start));
          start = i + 1;
        }
      }
      return parts;
    }

  }  // namespace

  FiniteGroup build_group(std::string_view spec) {
    std::string const name(spec);
    if (spec == "Q8") {
      return FiniteGroup(name, quaternion_table());
    }
    if (spec == "A4") {
      return FiniteGroup(name, alternating4_table());
    }
    if (spec == "C3:C4") {
      return FiniteGroup(name, dicyclic12_table());
    }
    if (spec.size() >= 2 && spec[0] == 'D') {
      std::size_t const n = parse_number(spec.substr(1), spec);
      if (n % 2 != 0) {
        throw ParseError("dihedral group '" + name
                         + "' must be written D<2n> with even order");
      }
      check_order(n, spec);
      return FiniteGroup(name, dihedral_table(n / 2));
    }
    if (spec.size() >= 2 && spec[0] == 'C') {
      auto const  factors = split_factors(spec);
      std::size_t order   = 1;
      Table       t       = cyclic_table(1);
      for (auto f : factors) {
        if (f.size() < 2 || f[0] != 'C') {
          throw ParseError("unknown group name '" + name + "'");
        }
        std::size_t const n = parse_number(f.substr(1), spec);
        if (n == 0) {
          throw ParseError("group '" + name + "' has a factor of order 0");
        }
        order *= n;
        check_order(order, spec);
        t = direct_product_table(t, cyclic_table(n));
      }
      return FiniteGroup(name, t);
    }
    throw ParseError("unknown group name '" + name + "'");
  }

  std::vector<std::string> catalog_names(std::size_t min_order,
                                         std::size_t max_order) {
    if (max_order > 15) {
      throw CapacityError("the group catalog is complete only up to order 15");
    }
    static std::vector<std::pair<std::size_t, std::string>> const catalog = {
        {1, "C1"},      {2, "C2"},       {3, "C3"},        {4, "C4"},
        {4, "C2xC2"},   {5, "C5"},       {6, "C6"},        {6, "D6"},
        {7, "C7"},      {8, "C8"},       {8, "C4xC2"},     {8, "C2xC2xC2"},
        {8, "D8"},      {8, "Q8"},       {9, "C9"},        {9, "C3xC3"},
        {10, "C10"},    {10, "D10"},     {11, "C11"},      {12, "C12"},
        {12, "C2xC6"},  {12, "D12"},     {12, "A4"},       {12, "C3:C4"},
        {13, "C13"},    {14, "C14"},     {14, "D14"},      {15, "C15"}};
    std::vector<std::string> out;
    for (auto const& [order, name] : catalog) {
      if (order >= min_order && order <= max_order) {
        out.push_back(name);
      }
    }
    return out;
  }

}  // namespace superx
