#include "superx/c5.hpp"

#include <array>
#include <charconv>

#include "superx/error.hpp"
#include "superx/superextension.hpp"

namespace superx::c5 {

  namespace {

    constexpr std::size_t kOrder = 5;

    int mod5(int x) {
      return ((x % 5) + 5) % 5;
    }

    // "02" -> {0,2}
    Mask digits(std::string_view s) {
      Mask m = 0;
      for (char c : s) {
        m |= singleton(static_cast<std::size_t>(c - '0'));
      }
      return m;
    }

    MaximalLinkedSystem from_digits(std::initializer_list<std::string_view> gens) {
      std::vector<Mask> sets;
      for (auto g : gens) {
        sets.push_back(digits(g));
      }
      return MaximalLinkedSystem(SetFamily::generate(kOrder, sets));
    }

    struct BaseEntry {
      std::string_view    name;
      MaximalLinkedSystem system;
    };

    std::vector<BaseEntry> const& bases() {
      static std::vector<BaseEntry> const table = {
          {"U", from_digits({"0"})},
          {"Z", MaximalLinkedSystem(majority_family(kOrder))},
          {"Lambda4", from_digits({"01", "02", "03", "04", "1234"})},
          {"Lambda", from_digits({"02", "03", "123", "014", "234"})},
          {"Delta", from_digits({"02", "03", "23"})},
          {"Lambda3", from_digits({"02", "03", "04", "234"})},
          {"Theta", from_digits({"14", "012", "013", "123", "024", "034", "234"})},
          {"Gamma", from_digits({"02", "04", "013", "124", "234"})}};
      return table;
    }

    std::string normalize(std::string_view name) {
      static std::array<std::pair<std::string_view, std::string_view>, 11> const
          aliases = {{{"Λ₄", "Lambda4"},
                      {"Λ4", "Lambda4"},
                      {"Λ₃", "Lambda3"},
                      {"Λ3", "Lambda3"},
                      {"Λ", "Lambda"},
                      {"Δ", "Delta"},
                      {"Θ", "Theta"},
                      {"Γ", "Gamma"},
                      {"𝒰", "U"},
                      {"𝒵", "Z"},
                      {"−", "-"}}};
      std::string s(name);
      for (auto const& [from, to] : aliases) {
        for (auto pos = s.find(from); pos != std::string::npos;
             pos      = s.find(from, pos + to.size())) {
          s.replace(pos, from.size(), to);
        }
      }
      return s;
    }

    std::string coefficient_text(int a) {
      switch (a) {
        case 1:
          return "";
        case -1:
          return "-";
        default:
          return std::to_string(a);
      }
    }

    std::string shift_text(int b) {
      if (b == 0) {
        return "";
      }
      return (b > 0 ? "+" : "") + std::to_string(b);
    }

  }  // namespace

  MaximalLinkedSystem affine_image(MaximalLinkedSystem const& l, int a, int b) {
    if (l.ground_size() != kOrder) {
      throw DomainError("affine images are defined on C5 only");
    }
    if (mod5(a) == 0) {
      throw DomainError("affine coefficient must be a unit mod 5");
    }
    std::vector<Mask> sets;
    for (Mask m : l.minimal_sets()) {
      Mask image = 0;
      for (auto x : elements_of(m)) {
        image |= singleton(static_cast<std::size_t>(
            mod5(a * static_cast<int>(x) + b)));
      }
      sets.push_back(image);
    }
    return MaximalLinkedSystem(SetFamily::generate(kOrder, sets));
  }

  MaximalLinkedSystem base(std::string_view name) {
    std::string const n = normalize(name);
    for (auto const& entry : bases()) {
      if (entry.name == n) {
        return entry.system;
      }
    }
    throw ParseError("unknown C5 system '" + std::string(name) + "'");
  }

  MaximalLinkedSystem resolve(std::string_view name) {
    std::string const s = normalize(name);
    std::size_t       pos = 0;
    int               a   = 1;
    bool              neg = false;
    if (pos < s.size() && s[pos] == '-') {
      neg = true;
      ++pos;
    }
    std::size_t const digits_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos > digits_start) {
      a = std::stoi(s.substr(digits_start, pos - digits_start));
    }
    if (neg) {
      a = -a;
    }
    static constexpr std::array<std::string_view, 8> tokens
        = {"Lambda4", "Lambda3", "Lambda", "Delta", "Theta", "Gamma", "U", "Z"};
    std::string_view base_name;
    for (auto t : tokens) {
      if (s.compare(pos, t.size(), t) == 0) {
        base_name = t;
        break;
      }
    }
    if (base_name.empty()) {
      throw ParseError("unknown C5 system '" + std::string(name) + "'");
    }
    pos += base_name.size();
    int b = 0;
    if (pos < s.size()) {
      if ((s[pos] != '+' && s[pos] != '-') || pos + 1 == s.size()) {
        throw ParseError("bad shift in C5 name '" + std::string(name) + "'");
      }
      int         value = 0;
      char const* first = s.data() + pos + 1;
      char const* last  = s.data() + s.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw ParseError("bad shift in C5 name '" + std::string(name) + "'");
      }
      b = s[pos] == '-' ? -value : value;
    }
    if (mod5(a) == 0) {
      throw ParseError("coefficient of '" + std::string(name)
                       + "' is not a unit mod 5");
    }
    return affine_image(base(base_name), a, b);
  }

  std::string render(MaximalLinkedSystem const& l) {
    for (auto const& entry : bases()) {
      for (int a : {1, -1, 2, -2}) {
        for (int b : {0, 1, -1, 2, -2}) {
          if (affine_image(entry.system, a, b) == l) {
            return coefficient_text(a) + std::string(entry.name) + shift_text(b);
          }
        }
      }
    }
    throw DomainError(l.to_string() + " has no name in the C5 catalog");
  }

  std::map<std::string, MaximalLinkedSystem> named_catalog() {
    std::map<std::string, MaximalLinkedSystem> out;
    for (auto const& entry : bases()) {
      out.emplace(std::string(entry.name), entry.system);
    }
    out.emplace("2Lambda", from_digits({"04", "01", "124", "023", "143"}));
    for (auto const& l : enumerate_mls(kOrder)) {
      out.emplace(render(l), l);
    }
    return out;
  }

  std::vector<std::string> const& t17_names() {
    static std::vector<std::string> const names
        = {"U",       "Z",        "Lambda4", "Lambda", "Delta",  "Lambda3",
           "-Lambda3", "2Lambda", "2Delta",  "2Lambda3", "-2Lambda3", "Theta",
           "2Theta",  "Gamma",    "-Gamma",  "2Gamma", "-2Gamma"};
    return names;
  }

  std::vector<std::vector<std::string>> const& t17_expected() {
    // Reference rows for Lambda4 .. -2Gamma; columns Lambda4, Lambda, Delta,
    // Lambda3, -Lambda3, 2Lambda, 2Delta, 2Lambda3, -2Lambda3, and the shared
    // aTheta/aGamma column.
    static std::vector<std::vector<std::string>> const reference_rows = {
        {"Lambda4", "Lambda", "Lambda", "Lambda", "Lambda", "2Lambda",
         "2Lambda", "2Lambda", "2Lambda", "Z"},
        {"Lambda", "Lambda", "Lambda", "Lambda", "Lambda", "Z", "Z", "Z", "Z",
         "Z"},
        {"Delta", "Lambda", "Lambda", "Lambda", "Lambda", "2Theta", "2Theta",
         "2Theta", "2Theta", "Z"},
        {"Lambda3", "Lambda", "Lambda", "Lambda", "Lambda", "2Theta+2",
         "2Theta+2", "2Theta+2", "2Theta+2", "Z"},
        {"-Lambda3", "Lambda", "Lambda", "Lambda", "Lambda", "2Theta-2",
         "2Theta-2", "2Theta-2", "2Theta-2", "Z"},
        {"2Lambda", "Z", "Z", "Z", "Z", "2Lambda", "2Lambda", "2Lambda",
         "2Lambda", "Z"},
        {"2Delta", "Theta", "Theta", "Theta", "Theta", "2Lambda", "2Lambda",
         "2Lambda", "2Lambda", "Z"},
        {"2Lambda3", "Theta-1", "Theta-1", "Theta-1", "Theta-1", "2Lambda",
         "2Lambda", "2Lambda", "2Lambda", "Z"},
        {"-2Lambda3", "Theta+1", "Theta+1", "Theta+1", "Theta+1", "2Lambda",
         "2Lambda", "2Lambda", "2Lambda", "Z"},
        {"Theta", "Theta", "Theta", "Theta", "Theta", "Z", "Z", "Z", "Z", "Z"},
        {"2Theta", "Z", "Z", "Z", "Z", "2Theta", "2Theta", "2Theta", "2Theta",
         "Z"},
        {"Gamma", "Theta+1", "Theta+1", "Theta+1", "Theta+1", "2Theta+2",
         "2Theta+2", "2Theta+2", "2Theta+2", "Z"},
        {"-Gamma", "Theta-1", "Theta-1", "Theta-1", "Theta-1", "2Theta-2",
         "2Theta-2", "2Theta-2", "2Theta-2", "Z"},
        {"2Gamma", "Theta-1", "Theta-1", "Theta-1", "Theta-1", "2Theta+2",
         "2Theta+2", "2Theta+2", "2Theta+2", "Z"},
        {"-2Gamma", "Theta+1", "Theta+1", "Theta+1", "Theta+1", "2Theta-2",
         "2Theta-2", "2Theta-2", "2Theta-2", "Z"}};
    static std::vector<std::vector<std::string>> const full = [] {
      auto const&                           names = t17_names();
      std::size_t const                     n     = names.size();
      std::vector<std::vector<std::string>> t(n, std::vector<std::string>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == 0) {
            t[i][j] = names[j];
          } else if (j == 0) {
            t[i][j] = names[i];
          } else if (i == 1 || j == 1) {
            t[i][j] = "Z";
          } else {
            t[i][j] = reference_rows[i - 2][std::min<std::size_t>(j - 2, 9)];
          }
        }
      }
      return t;
    }();
    return full;
  }

  T17Comparison compare_t17() {
    FiniteGroup const g = build_group("C5");
    auto const&       names    = t17_names();
    auto const&       expected = t17_expected();
    std::vector<MaximalLinkedSystem> reps;
    for (auto const& n : names) {
      reps.push_back(resolve(n));
    }
    T17Comparison out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = 0; j < names.size(); ++j) {
        auto const want = resolve(expected[i][j]);
        auto const rc   = circ(g, reps[i], reps[j]);
        auto const cr   = circ(g, reps[j], reps[i]);
        T17Cell    cell{names[i],   names[j],   expected[i][j], render(rc),
                     render(cr), rc == want, cr == want};
        out.row_col_matches += cell.row_col_match ? 1 : 0;
        out.col_row_matches += cell.col_row_match ? 1 : 0;
        out.cells.push_back(std::move(cell));
      }
    }
    return out;
  }

}  // namespace superx::c5
