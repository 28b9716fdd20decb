#include "superx/commands.hpp"

#include <algorithm>
#include <chrono>

#include "superx/c5.hpp"
#include "superx/error.hpp"
#include "superx/expected.hpp"
#include "superx/invariant.hpp"
#include "superx/orbit.hpp"

namespace superx {

  using nlohmann::ordered_json;

  namespace {

    class Stopwatch {
     public:
      std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - _start)
            .count();
      }

     private:
      std::chrono::steady_clock::time_point _start
          = std::chrono::steady_clock::now();
    };

    Status combine(bool any_expected, bool all_match) {
      if (!any_expected) {
        return Status::info;
      }
      return all_match ? Status::pass : Status::fail;
    }

    std::string label(LambdaTable const& t, Index i) {
      if (t.group().name() == "C5") {
        return c5::render(t.elements()[i]);
      }
      return t.elements()[i].to_string();
    }

    ordered_json labels(LambdaTable const& t, std::vector<Index> const& ids) {
      ordered_json out = ordered_json::array();
      for (auto i : ids) {
        out.push_back(label(t, i));
      }
      return out;
    }

    std::optional<expected::LambdaStructure> reference_structure(
        std::string_view group) {
      for (auto const& row : expected::kStructure) {
        if (row.group == group) {
          return row;
        }
      }
      return std::nullopt;
    }

    bool is_cyclic_name(std::string_view group) {
      return group.size() >= 2 && group[0] == 'C'
             && group.find_first_not_of("0123456789", 1) == std::string_view::npos;
    }

  }  // namespace

  LambdaQuery parse_lambda_query(std::string_view text) {
    if (text == "count") {
      return LambdaQuery::count;
    }
    if (text == "table") {
      return LambdaQuery::table;
    }
    if (text == "structure") {
      return LambdaQuery::structure;
    }
    throw ParseError("unknown lambda query '" + std::string(text)
                     + "' (expected count, table or structure)");
  }

  Report cmd_sl_table(std::size_t max_order) {
    Stopwatch clock;
    Report    r{"sl-table", std::nullopt, Status::info, {}, 0};
    ordered_json rows = ordered_json::array();
    bool         any_expected = false, all_match = true;
    for (auto const& name : catalog_names(2, max_order)) {
      auto const g   = build_group(name);
      auto const min = min_self_linked(g);
      auto const exp = expected::lookup(expected::kSl, name);
      ordered_json row{{"group", name},
                       {"order", g.order()},
                       {"lower_bound", sl_lower_bound(g.order())},
                       {"computed", min.size},
                       {"expected", exp ? ordered_json(*exp) : ordered_json(nullptr)},
                       {"match", exp ? ordered_json(*exp == min.size) : ordered_json(nullptr)},
                       {"witness", mask_to_string(min.witness)}};
      if (exp) {
        any_expected = true;
        all_match    = all_match && *exp == min.size;
      }
      rows.push_back(std::move(row));
    }
    r.status         = combine(any_expected, all_match);
    r.payload["rows"] = std::move(rows);
    r.elapsed_ms     = clock.ms();
    return r;
  }

  Report cmd_lambda(std::string_view      group,
                    LambdaQuery           what,
                    CommandOptions const& options) {
    Stopwatch   clock;
    auto const  g = build_group(group);
    std::size_t const n = g.order();
    Report      r{"lambda", g.name(), Status::info, {}, 0};

    switch (what) {
      case LambdaQuery::count: {
        auto const size   = count_mls(n, options.allow_large);
        auto const orbits = count_lambda_orbits(g, options.allow_large);
        r.payload["query"]  = "count";
        r.payload["order"]  = n;
        r.payload["size"]   = size;
        r.payload["orbits"] = orbits;
        bool any = false, ok = true;
        if (n <= expected::kLambdaSize.size()) {
          r.payload["expected_size"] = expected::kLambdaSize[n - 1];
          any                        = true;
          ok                         = size == expected::kLambdaSize[n - 1];
          if (is_cyclic_name(g.name())) {
            r.payload["expected_orbits"] = expected::kLambdaOrbits[n - 1];
            ok = ok && orbits == expected::kLambdaOrbits[n - 1];
          }
        }
        r.status = combine(any, ok);
        break;
      }
      case LambdaQuery::table: {
        CacheOutcome outcome = CacheOutcome::disabled;
        auto const   t       = cached_lambda_table(g, options.cache, &outcome);
        r.payload["query"] = "table";
        r.payload["size"]  = t.size();
        r.payload["cache"] = std::string(to_string(outcome));
        r.payload["table"] = serialize_table(t);
        break;
      }
      case LambdaQuery::structure: {
        auto const  t = cached_lambda_table(g, options.cache);
        auto const& s = t.table();
        auto const  e = idempotents(s);
        auto const  z = zero(s);
        auto const  k = minimal_ideal(s);
        auto const  c = is_commutative(s);
        auto const  q = orbit_quotient(t);

        std::size_t  largest = 0;
        ordered_json groups  = ordered_json::array();
        for (auto i : e) {
          auto const h = maximal_subgroup_at(s, i);
          largest      = std::max(largest, h.elements.size());
          groups.push_back({{"idempotent", label(t, i)}, {"order", h.elements.size()}});
        }
        auto const transversal = transversal_subsemigroup(t.table(), q);

        r.payload["query"]       = "structure";
        r.payload["size"]        = t.size();
        r.payload["orbits"]      = q.orbit_count();
        r.payload["idempotents"] = labels(t, e);
        r.payload["right_zeros"] = labels(t, right_zeros(s));
        r.payload["left_zeros"]  = labels(t, left_zeros(s));
        r.payload["zero"] = z ? ordered_json(label(t, *z)) : ordered_json(nullptr);
        r.payload["minimal_ideal_size"] = k.size();
        if (k.size() <= 16) {
          r.payload["minimal_ideal"] = labels(t, k);
        }
        r.payload["commutative"] = c.commutative;
        if (c.witness) {
          r.payload["noncommuting_pair"]
              = ordered_json::array({label(t, c.witness->first), label(t, c.witness->second)});
        }
        auto const central = central_elements(s);
        r.payload["central_count"] = central.size();
        if (central.size() <= 16) {
          r.payload["central"] = labels(t, central);
        }
        r.payload["sqrt_idempotents"] = sqrt_of_idempotents(s).size();
        r.payload["largest_maximal_group"] = largest;
        r.payload["transversal_subsemigroup"]
            = transversal ? ordered_json(labels(t, *transversal)) : ordered_json(nullptr);
        r.payload["maximal_groups"] = std::move(groups);

        if (auto const pub = reference_structure(g.name())) {
          ordered_json rows = ordered_json::array();
          bool         ok   = true;
          auto const   row  = [&](std::string name, auto expected, auto computed) {
            bool const match = ordered_json(expected) == ordered_json(computed);
            ok               = ok && match;
            rows.push_back({{"property", std::move(name)},
                            {"expected", expected},
                            {"computed", computed},
                            {"match", match}});
          };
          row("size", expected::kLambdaSize[n - 1], t.size());
          row("idempotents", pub->idempotents, e.size());
          row("minimal ideal size", pub->minimal_ideal, k.size());
          row("largest maximal group", pub->maximal_group, largest);
          row("has zero", pub->has_zero, z.has_value());
          row("commutative", n <= expected::kMaxCommutativeOrder, c.commutative);
          r.payload["rows"] = std::move(rows);
          r.status          = combine(true, ok);
        }
        break;
      }
    }
    r.elapsed_ms = clock.ms();
    return r;
  }

  Report cmd_invariant(std::string_view group, CommandOptions const& options) {
    Stopwatch  clock;
    auto const g       = build_group(group);
    auto const systems = enumerate_invariant_mls(g, options.allow_large);
    Report     r{"invariant", g.name(), Status::info, {}, 0};

    bool any = false, ok = true;
    r.payload["order"] = g.order();
    r.payload["count"] = systems.size();
    if (auto exp = expected::lookup(expected::kInvariantCount, g.name())) {
      r.payload["expected_count"] = *exp;
      any                         = true;
      ok                          = *exp == systems.size();
    }
    r.payload["sl"] = sl(g);
    if (g.order() % 2 == 0) {
      auto const s  = sim_classes(g).s();
      auto const up = up_L0_count(g, systems);
      r.payload["s"]           = s;
      r.payload["up_L0_count"] = up;
      r.payload["two_to_s"]    = std::size_t{1} << s;
      ok                       = ok && up == (std::size_t{1} << s);
      if (auto exp = expected::lookup(expected::kSimClasses, g.name())) {
        r.payload["expected_s"] = *exp;
        any                     = true;
        ok                      = ok && *exp == s;
      }
    }
    auto const   majority = majority_family(g);
    ordered_json rows     = ordered_json::array();
    for (auto const& s : systems) {
      bool const contains_majority
          = std::all_of(majority.minimal_sets().begin(), majority.minimal_sets().end(),
                        [&](Mask a) { return s.family.contains(a); });
      rows.push_back({{"family", serialize_family(s.family)},
                      {"generators", s.family.minimal_sets().size()},
                      {"maximal_linked", is_maximal_linked(s.family)},
                      {"contains_majority", contains_majority}});
    }
    r.payload["rows"] = std::move(rows);
    r.status          = combine(any, ok);
    r.elapsed_ms      = clock.ms();
    return r;
  }

  Report cmd_c5_t17() {
    Stopwatch  clock;
    auto const cmp = c5::compare_t17();
    Report     r{"c5-t17", std::string("C5"), Status::info, {}, 0};
    r.payload["cells"]                   = cmp.cells.size();
    r.payload["row_o_column_matches"]    = cmp.row_col_matches;
    r.payload["column_o_row_matches"]    = cmp.col_row_matches;
    ordered_json rows = ordered_json::array();
    for (auto const& c : cmp.cells) {
      rows.push_back({{"row", c.row},
                      {"column", c.col},
                      {"expected", c.expected},
                      {"computed", c.row_col},
                      {"match", c.row_col_match},
                      {"column_o_row", c.col_row}});
    }
    r.payload["rows"] = std::move(rows);
    r.status          = cmp.passed() ? Status::pass : Status::fail;
    r.elapsed_ms      = clock.ms();
    return r;
  }

  Report cmd_verify_paper(verify::Scope scope, CommandOptions const& options) {
    Stopwatch       clock;
    verify::Context ctx(scope, options.cache);
    auto const      results = verify::run_all(ctx);
    Report          r{"verify-paper", std::nullopt, Status::pass, {}, 0};
    r.payload["scope"] = scope == verify::Scope::all ? "all" : "fast";
    ordered_json summary = ordered_json::array();
    ordered_json rows    = ordered_json::array();
    for (auto const& c : results) {
      summary.push_back({{"criterion", c.id},
                         {"title", c.title},
                         {"result", c.passed() ? "PASS" : "FAIL"},
                         {"checks", c.checks.size()},
                         {"mismatches", c.mismatches()},
                         {"elapsed_ms", c.elapsed_ms},
                         {"limit_ms", c.limit_ms}});
      if (!c.error.empty()) {
        summary.back()["error"] = c.error;
      }
      for (auto const& check : c.checks) {
        rows.push_back({{"criterion", c.id},
                        {"check", check.name},
                        {"expected", check.expected},
                        {"computed", check.computed},
                        {"match", check.match}});
      }
      if (!c.passed()) {
        r.status = Status::fail;
      }
    }
    r.payload["criteria"] = std::move(summary);
    r.payload["rows"]     = std::move(rows);
    r.elapsed_ms          = clock.ms();
    return r;
  }

  Report cmd_explore_sl(std::size_t max_n) {
    if (max_n < 1 || max_n > kMaxGroupOrder) {
      throw CapacityError("explore-sl covers cyclic groups of order 1..16");
    }
    Stopwatch    clock;
    Report       r{"explore-sl", std::nullopt, Status::info, {}, 0};
    ordered_json rows = ordered_json::array();
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto const  name  = "C" + std::to_string(n);
      auto const  min   = min_self_linked(build_group(name));
      auto const  bound = sl_lower_bound(n);
      auto const  pub   = expected::lookup(expected::kSl, name);
      rows.push_back({{"n", n},
                      {"sl", min.size},
                      {"lower_bound", bound},
                      {"attains_bound", min.size == bound},
                      {"reference", pub ? ordered_json(*pub) : ordered_json(nullptr)},
                      {"witness", mask_to_string(min.witness)}});
    }
    r.payload["rows"] = std::move(rows);
    r.elapsed_ms      = clock.ms();
    return r;
  }

}  // namespace superx
