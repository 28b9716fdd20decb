#include "superx/superextension.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "superx/error.hpp"

namespace superx {

  SetFamily circ(FiniteGroup const& g, SetFamily const& a, SetFamily const& b) {
    if (a.ground_size() != g.order() || b.ground_size() != g.order()) {
      throw DomainError("circ: families must live on the group " + g.name());
    }
    std::size_t const n = g.order();
    return SetFamily::from_predicate(n, [&](Mask c) {
      Mask support = 0;
      for (Elem x = 0; x < n; ++x) {
        if (b.contains(g.translate_inverse(x, c))) {
          support |= singleton(x);
        }
      }
      return a.contains(support);
    });
  }

  MaximalLinkedSystem circ(FiniteGroup const&         g,
                           MaximalLinkedSystem const& a,
                           MaximalLinkedSystem const& b) {
    return MaximalLinkedSystem(circ(g, a.family(), b.family()));
  }

  namespace {

    // For a fixed right operand B, support[C] = {x : x^{-1}C in B}; then
    // A o B contains C iff A contains support[C]. With membership bitmaps a
    // product costs 2^n bit lookups.
    std::vector<Mask> supports(FiniteGroup const&            g,
                               std::vector<Mask> const&      inverse_shift,
                               std::uint64_t                 b) {
      std::size_t const n     = g.order();
      std::size_t const count = std::size_t{1} << n;
      std::vector<Mask> out(count, 0);
      for (std::size_t c = 0; c < count; ++c) {
        Mask s = 0;
        for (Elem x = 0; x < n; ++x) {
          if ((b >> inverse_shift[x * count + c]) & 1U) {
            s |= singleton(x);
          }
        }
        out[c] = s;
      }
      return out;
    }

  }  // namespace

  void LambdaTable::index_elements() {
    _bits.clear();
    _lookup.clear();
    for (Index i = 0; i < _elements.size(); ++i) {
      _bits.push_back(membership_bits(_elements[i].family()));
      _lookup.emplace(_bits.back(), i);
    }
    std::size_t const n = _group.order();
    _principal.assign(n, 0);
    for (Elem x = 0; x < n; ++x) {
      _principal[x] = index_of(principal_ultrafilter(_group, x));
    }
    _action.assign(n, std::vector<Index>(_elements.size()));
    for (Elem x = 0; x < n; ++x) {
      for (Index i = 0; i < _elements.size(); ++i) {
        _action[x][i] = index_of(shift_mls(_group, x, _elements[i]));
      }
    }
  }

  LambdaTable LambdaTable::build(FiniteGroup const& g, unsigned threads) {
    if (g.order() > kMaxLambdaTableOrder) {
      throw CapacityError("Cayley tables of lambda(G) are limited to |G| <= 6");
    }
    LambdaTable out(g);
    out._elements = enumerate_mls(g.order());
    out.index_elements();

    std::size_t const n     = g.order();
    std::size_t const count = std::size_t{1} << n;
    std::size_t const size  = out._elements.size();
    std::vector<Mask> inverse_shift(n * count);
    for (Elem x = 0; x < n; ++x) {
      for (std::size_t c = 0; c < count; ++c) {
        inverse_shift[x * count + c] = g.translate_inverse(x, static_cast<Mask>(c));
      }
    }
    std::vector<std::vector<Mask>> support(size);
    for (Index j = 0; j < size; ++j) {
      support[j] = supports(g, inverse_shift, out._bits[j]);
    }

    std::vector<Index> product(size * size);
    auto               fill_rows = [&](std::size_t first, std::size_t step) {
      for (std::size_t i = first; i < size; i += step) {
        std::uint64_t const a = out._bits[i];
        for (std::size_t j = 0; j < size; ++j) {
          std::uint64_t c_bits = 0;
          auto const&   sup    = support[j];
          for (std::size_t c = 0; c < count; ++c) {
            c_bits |= ((a >> sup[c]) & 1U) << c;
          }
          auto const it = out._lookup.find(c_bits);
          if (it == out._lookup.end()) {
            throw ConsistencyError("product of two maximal linked systems is "
                                   "not maximal linked");
          }
          product[i * size + j] = it->second;
        }
      }
    };
    unsigned const workers = std::max(
        1U, threads != 0 ? threads : std::thread::hardware_concurrency());
    if (workers == 1) {
      fill_rows(0, 1);
    } else {
      std::vector<std::exception_ptr> errors(workers);
      {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            try {
              fill_rows(w, workers);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
    }
    out._table = SemigroupTable(size, std::move(product));
    return out;
  }

  LambdaTable LambdaTable::from_parts(FiniteGroup                      g,
                                      std::vector<MaximalLinkedSystem> elements,
                                      SemigroupTable                   table) {
    if (g.order() > kMaxLambdaTableOrder) {
      throw CapacityError("Cayley tables of lambda(G) are limited to |G| <= 6");
    }
    if (elements != enumerate_mls(g.order())) {
      throw ConsistencyError("element list is not the canonical lambda(G)");
    }
    if (table.size() != elements.size()) {
      throw ConsistencyError("table order does not match the element count");
    }
    LambdaTable out(std::move(g));
    out._elements = std::move(elements);
    out.index_elements();
    out._table = std::move(table);
    return out;
  }

  std::optional<Index> LambdaTable::index_of(SetFamily const& f) const {
    if (f.ground_size() != _group.order()) {
      return std::nullopt;
    }
    auto const it = _lookup.find(membership_bits(f));
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Index LambdaTable::index_of(MaximalLinkedSystem const& l) const {
    auto const i = index_of(l.family());
    if (!i) {
      throw DomainError(l.to_string() + " is not an element of lambda("
                        + _group.name() + ")");
    }
    return *i;
  }

  std::string serialize_table(LambdaTable const& t) {
    std::string out = "superx-table v1 group=" + t.group().name()
                      + " order=" + std::to_string(t.size()) + "\n";
    for (auto const& l : t.elements()) {
      out += serialize_family(l.family());
      out += '\n';
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j != 0) {
          out += ' ';
        }
        out += std::to_string(t.table()(i, j));
      }
      out += '\n';
    }
    return out;
  }

  LambdaTable parse_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        header;
    std::getline(in, header);
    std::istringstream head(header);
    std::string        magic, version, group_kv, order_kv;
    head >> magic >> version >> group_kv >> order_kv;
    if (magic != "superx-table" || version != "v1"
        || group_kv.rfind("group=", 0) != 0 || order_kv.rfind("order=", 0) != 0) {
      throw ParseError("bad superx-table header");
    }
    FiniteGroup g    = build_group(group_kv.substr(6));
    std::size_t size = 0;
    try {
      size = std::stoul(order_kv.substr(6));
    } catch (std::exception const&) {
      throw ParseError("bad superx-table order");
    }
    std::vector<MaximalLinkedSystem> elements;
    std::string                      line;
    for (std::size_t i = 0; i < size; ++i) {
      if (!std::getline(in, line)) {
        throw ParseError("superx-table truncated in the element list");
      }
      try {
        elements.emplace_back(parse_family(line, g.order()));
      } catch (DomainError const& e) {
        throw ParseError(e.what());
      }
    }
    std::vector<Index> product;
    product.reserve(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      if (!std::getline(in, line)) {
        throw ParseError("superx-table truncated in the product rows");
      }
      std::istringstream row(line);
      Index              v = 0;
      std::size_t        k = 0;
      while (row >> v) {
        product.push_back(v);
        ++k;
      }
      if (k != size) {
        throw ParseError("superx-table row " + std::to_string(i) + " has "
                         + std::to_string(k) + " entries");
      }
    }
    try {
      return LambdaTable::from_parts(std::move(g), std::move(elements),
                                     SemigroupTable(size, std::move(product)));
    } catch (ConsistencyError const& e) {
      throw ParseError(e.what());
    }
  }

}  // namespace superx
