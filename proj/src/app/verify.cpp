#include "superx/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "superx/c5.hpp"
#include "superx/error.hpp"
#include "superx/expected.hpp"
#include "superx/invariant.hpp"
#include "superx/orbit.hpp"
#include "superx/oracle/brute_force.hpp"

namespace superx::verify {

  using nlohmann::ordered_json;

  Scope parse_scope(std::string_view text) {
    if (text == "fast") {
      return Scope::fast;
    }
    if (text == "all") {
      return Scope::all;
    }
    throw ParseError("unknown scope '" + std::string(text) + "'");
  }

  bool CriterionResult::passed() const noexcept {
    return error.empty() && !checks.empty() && mismatches() == 0
           && within_limit();
  }

  std::size_t CriterionResult::mismatches() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [](Check const& c) { return !c.match; }));
  }

  LambdaTable const& Context::lambda(std::string const& group) {
    auto& slot = _tables[group];
    if (!slot) {
      slot = std::make_unique<LambdaTable>(
          cached_lambda_table(build_group(group), _cache));
    }
    return *slot;
  }

  namespace {

    struct Spec {
      std::string_view title;
      std::int64_t     limit_ms;
    };

    constexpr std::array<Spec, kCriterionCount> kSpecs = {{
        {"lambda counts", 30'000},
        {"orbit counts", 60'000},
        {"sl table", 10'000},
        {"invariant system counts", 60'000},
        {"2^s law", 0},
        {"lambda(C5) structure", 30'000},
        {"T17 Cayley table", 0},
        {"isomorphism claims", 5'000},
        {"odd-group equivalences", 0},
        {"property suites", 600'000},
    }};

    template <typename E, typename C>
    Check make_check(std::string name, E const& expected, C const& computed) {
      ordered_json e = expected;
      ordered_json c = computed;
      bool const   match = e == c;
      return {std::move(name), std::move(e), std::move(c), match};
    }

    // A property: zero failures expected out of `cases` tested.
    Check property(std::string name, std::size_t cases, std::size_t failures) {
      return make_check(std::move(name) + " [" + std::to_string(cases)
                            + " cases]",
                        std::size_t{0}, failures);
    }

    std::string name_in_c5(LambdaTable const& t, Index i) {
      return c5::render(t.elements()[i]);
    }

    std::vector<std::string> names_in_c5(LambdaTable const&        t,
                                         std::vector<Index> const& ids) {
      std::vector<std::string> out;
      for (auto i : ids) {
        out.push_back(name_in_c5(t, i));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<std::string> cyclic_up_to(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t k = 1; k <= n; ++k) {
        out.push_back("C" + std::to_string(k));
      }
      return out;
    }

    // ---------------------------------------------------------------------

    void lambda_counts(Context&, std::vector<Check>& checks) {
      for (auto const& name : cyclic_up_to(6)) {
        auto const g = build_group(name);
        checks.push_back(make_check("|lambda(" + name + ")|",
                                    expected::kLambdaSize[g.order() - 1],
                                    enumerate_mls(g.order()).size()));
      }
      checks.push_back(make_check("|lambda(C2xC2)|", expected::kLambdaSize[3],
                                  enumerate_mls(build_group("C2xC2").order()).size()));
    }

    void orbit_counts(Context& ctx, std::vector<Check>& checks) {
      for (auto const& name : cyclic_up_to(6)) {
        auto const g = build_group(name);
        checks.push_back(make_check("|lambda(" + name + ")/" + name + "|",
                                    expected::kLambdaOrbits[g.order() - 1],
                                    count_lambda_orbits(g)));
      }
      if (ctx.builds_tables_of_order(6)) {
        checks.push_back(make_check("|lambda(C6)/C6| from the table action",
                                    expected::kLambdaOrbits[5],
                                    orbit_quotient(ctx.lambda("C6")).orbit_count()));
      }
    }

    void sl_table(Context&, std::vector<Check>& checks) {
      std::set<std::string> listed;
      for (auto const& row : expected::kSl) {
        listed.emplace(row.group);
        checks.push_back(make_check("sl(" + std::string(row.group) + ")",
                                    row.value,
                                    sl(build_group(row.group))));
      }
      std::vector<std::string> missing;
      for (auto const& name : catalog_names(2, 13)) {
        if (listed.erase(name) == 0) {
          missing.push_back(name);
        }
      }
      missing.insert(missing.end(), listed.begin(), listed.end());
      checks.push_back(make_check("groups of order 2..13 missing from the table",
                                  std::vector<std::string>{}, missing));
    }

    void invariant_counts(Context&, std::vector<Check>& checks) {
      for (auto const& row : expected::kInvariantCount) {
        checks.push_back(make_check(
            "|invariant lambda(" + std::string(row.group) + ")|", row.value,
            enumerate_invariant_mls(build_group(row.group)).size()));
      }
    }

    void two_to_the_s(Context&, std::vector<Check>& checks) {
      for (auto const& row : expected::kSimClasses) {
        auto const g       = build_group(row.group);
        auto const s       = sim_classes(g).s();
        auto const systems = enumerate_invariant_mls(g);
        std::string const name(row.group);
        checks.push_back(make_check("s(" + name + ")", row.value, s));
        checks.push_back(make_check("up_L0(" + name + ") = 2^s",
                                    std::size_t{1} << row.value,
                                    up_L0_count(g, systems)));
      }
    }

    void c5_structure(Context& ctx, std::vector<Check>& checks) {
      auto const& t = ctx.lambda("C5");
      auto const& s = t.table();

      auto const z = zero(s);
      checks.push_back(make_check("zero", "Z", z ? name_in_c5(t, *z) : "none"));
      if (!z) {
        return;
      }

      std::vector<std::string> idempotent_names(expected::kC5Idempotents.begin(),
                                                expected::kC5Idempotents.end());
      std::sort(idempotent_names.begin(), idempotent_names.end());
      checks.push_back(make_check("idempotents", idempotent_names,
                                  names_in_c5(t, idempotents(s))));

      std::vector<Index> principal_and_zero;
      for (Elem x = 0; x < 5; ++x) {
        principal_and_zero.push_back(t.principal(x));
      }
      principal_and_zero.push_back(t.index_of(c5::resolve("Z")));
      checks.push_back(make_check("central elements = C5 u {Z}",
                                  names_in_c5(t, principal_and_zero),
                                  names_in_c5(t, central_elements(s))));

      auto const roots = sqrt_of_idempotents(s);
      checks.push_back(
          make_check("|sqrt(E)|", expected::kC5SqrtIdempotents, roots.size()));

      // sqrt(E) = T17 u sqrt(Z), with 24 elements outside T17.
      std::set<Index> t17;
      for (auto const& name : c5::t17_names()) {
        t17.insert(t.index_of(c5::resolve(name)));
      }
      std::set<Index> union_set(t17);
      for (Index x = 0; x < s.size(); ++x) {
        if (s(x, x) == *z) {
          union_set.insert(x);
        }
      }
      checks.push_back(make_check("sqrt(E) = T17 u sqrt(Z)",
                                  std::vector<Index>(union_set.begin(), union_set.end()),
                                  roots));
      checks.push_back(make_check("|sqrt(E) \\ T17|", expected::kC5SqrtZExtra,
                                  roots.size() - t17.size()));

      checks.push_back(make_check("minimal ideal", std::vector<std::string>{"Z"},
                                  names_in_c5(t, minimal_ideal(s))));

      std::vector<std::size_t> nontrivial;
      for (auto e : idempotents(s)) {
        auto const h = maximal_subgroup_at(s, e);
        if (h.elements.size() > 1) {
          nontrivial.push_back(h.elements.size());
        }
      }
      checks.push_back(make_check("nontrivial maximal subgroups have order 5",
                                  std::vector<std::size_t>(nontrivial.size(), 5),
                                  nontrivial));
      checks.push_back(make_check("some maximal subgroup is nontrivial", true,
                                  !nontrivial.empty()));

      checks.push_back(make_check("transversal subsemigroup", "absent",
                                  transversal_subsemigroup(t) ? "found" : "absent"));
    }

    void t17_table(Context&, std::vector<Check>& checks) {
      auto const        cmp = c5::compare_t17();
      std::size_t const n   = cmp.cells.size();
      bool const        rc  = cmp.row_col_matches == n;
      bool const        cr  = cmp.col_row_matches == n;
      std::string       orientation = "none";
      if (rc && cr) {
        orientation = "both";
      } else if (rc) {
        orientation = "row o column";
      } else if (cr) {
        orientation = "column o row";
      }
      checks.push_back(make_check("orientations matching all " + std::to_string(n)
                                      + " cells",
                                  "exactly one", rc != cr ? "exactly one" : orientation));
      bool const use_col_row = cr && !rc;
      for (auto const& cell : cmp.cells) {
        checks.push_back(make_check(
            cell.row + " , " + cell.col, cell.expected,
            use_col_row ? cell.col_row : cell.row_col));
      }
      checks.push_back(make_check("cells matching under row o column", n,
                                  cmp.row_col_matches));
    }

    void isomorphisms(Context& ctx, std::vector<Check>& checks) {
      auto const c2_1 = adjoin_identity(group_table(build_group("C2")));
      struct Claim {
        std::string    name;
        std::string    group;
        SemigroupTable target;
      };
      std::vector<Claim> const claims = {
          {"lambda(C3) ~ C3 with zero adjoined", "C3",
           adjoin_zero(group_table(build_group("C3")))},
          {"lambda(C4) ~ C2^1 x C4", "C4",
           direct_product(c2_1, group_table(build_group("C4")))},
          {"lambda(C2xC2) ~ C2^1 x C2xC2", "C2xC2",
           direct_product(c2_1, group_table(build_group("C2xC2")))},
      };
      for (auto const& claim : claims) {
        auto const& t = ctx.lambda(claim.group);
        auto const  f = find_isomorphism(t.table(), claim.target);
        checks.push_back(make_check(claim.name, "isomorphic",
                                    f ? "isomorphic" : "not isomorphic"));
      }
    }

    void equivalences(Context& ctx, std::vector<Check>& checks) {
      std::vector<std::string> groups = cyclic_up_to(6);
      groups.push_back("C2xC2");
      groups.push_back("D6");
      for (auto const& name : groups) {
        auto const g = build_group(name);
        if (!ctx.builds_tables_of_order(g.order())) {
          continue;
        }
        auto const& s = ctx.lambda(name).table();
        bool const  expect_zero
            = std::find(expected::kZeroGroups.begin(), expected::kZeroGroups.end(),
                        name)
              != expected::kZeroGroups.end();
        checks.push_back(make_check("lambda(" + name + ") has a zero", expect_zero,
                                    zero(s).has_value()));
        checks.push_back(make_check("lambda(" + name + ") commutative",
                                    g.order() <= expected::kMaxCommutativeOrder,
                                    is_commutative(s).commutative));
        auto const left = left_zeros(s);
        auto const z    = zero(s);
        checks.push_back(make_check(
            "left zeros of lambda(" + name + ") = {zero} or none",
            z ? std::vector<Index>{*z} : std::vector<Index>{}, left));
      }

      auto const w = c2_cubed_witness();
      checks.push_back(make_check("C2^3 disjoint-member witness", true, w.holds));

      for (auto const& name : catalog_names(1, 8)) {
        auto const                 g = build_group(name);
        std::optional<std::size_t> right_zero_count;
        if (g.order() <= kMaxLambdaTableOrder && ctx.builds_tables_of_order(g.order())) {
          right_zero_count = right_zeros(ctx.lambda(name).table()).size();
        }
        auto const   r = odd_equivalence_report(g, right_zero_count);
        ordered_json computed{{"(1)", r.right_zero ? ordered_json(*r.right_zero)
                                                   : ordered_json(nullptr)},
                              {"(2)", r.some_invariant_maximal},
                              {"(3)", r.all_invariant_maximal},
                              {"(4)", r.partition},
                              {"(5)", r.odd}};
        ordered_json expected_json = computed;
        for (auto& [k, v] : expected_json.items()) {
          if (!v.is_null()) {
            v = r.odd;
          }
        }
        checks.push_back(make_check("odd-group conditions agree for " + name,
                                    expected_json, computed));
      }
    }

    // --- property suites -------------------------------------------------

    std::vector<std::string> groups_of_order_at_most(std::size_t n) {
      return catalog_names(1, n);
    }

    void associativity(Context&, std::vector<Check>& checks) {
      std::size_t cases = 0, failures = 0;
      for (auto const& name : groups_of_order_at_most(4)) {
        auto const g  = build_group(name);
        auto const ls = enumerate_mls(g.order());
        for (auto const& a : ls) {
          for (auto const& b : ls) {
            auto const ab = circ(g, a, b);
            for (auto const& c : ls) {
              ++cases;
              failures += circ(g, ab, c) != circ(g, a, circ(g, b, c));
            }
          }
        }
      }
      checks.push_back(property("associativity, exhaustive |G| <= 4", cases, failures));

      cases = failures = 0;
      std::mt19937_64 rng(20240501);
      for (auto const* name : {"C5", "C6", "D6"}) {
        auto const g  = build_group(name);
        auto const ls = enumerate_mls(g.order());
        std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
        for (int i = 0; i < 10'000; ++i) {
          auto const& a = ls[pick(rng)];
          auto const& b = ls[pick(rng)];
          auto const& c = ls[pick(rng)];
          ++cases;
          failures += circ(g, circ(g, a, b), c) != circ(g, a, circ(g, b, c));
        }
      }
      checks.push_back(property("associativity, random triples on C5, C6, D6",
                                cases, failures));
    }

    void involution(Context&, std::vector<Check>& checks) {
      std::size_t cases = 0, failures = 0, oracle_failures = 0;
      for (std::size_t n = 1; n <= 4; ++n) {
        for (auto const& f : oracle::all_antichains(n)) {
          auto const family = SetFamily::generate(n, f);
          auto const perp   = transversal(family);
          ++cases;
          failures += transversal(perp) != family;
          oracle_failures += perp.minimal_sets() != oracle::transversal(n, f);
        }
      }
      checks.push_back(property("(F^perp)^perp = F, every family on n <= 4",
                                cases, failures));
      checks.push_back(property("transversal equals brute force, n <= 4", cases,
                                oracle_failures));

      cases = failures = oracle_failures = 0;
      std::mt19937_64                            rng(7);
      std::uniform_int_distribution<std::size_t> size(1, 6);
      for (int i = 0; i < 1000; ++i) {
        std::size_t const                   n = size(rng);
        std::uniform_int_distribution<Mask> mask(1, full_mask(n));
        std::vector<Mask>                   gens(size(rng));
        for (auto& m : gens) {
          m = mask(rng);
        }
        auto const family = SetFamily::generate(n, gens);
        auto const perp   = transversal(family);
        ++cases;
        failures += transversal(perp) != family;
        oracle_failures
            += perp.minimal_sets() != oracle::transversal(n, family.minimal_sets());
      }
      checks.push_back(property("(F^perp)^perp = F, random families on n <= 6",
                                cases, failures));
      checks.push_back(property("transversal equals brute force, random n <= 6",
                                cases, oracle_failures));
    }

    void closure_and_routes(Context& ctx, std::vector<Check>& checks) {
      std::size_t cases = 0, failures = 0, route_failures = 0;
      for (auto const& name : groups_of_order_at_most(5)) {
        auto const  g = build_group(name);
        auto const& t = ctx.lambda(name);
        auto const& ls = t.elements();
        for (std::size_t i = 0; i < ls.size(); ++i) {
          for (std::size_t j = 0; j < ls.size(); ++j) {
            auto const f = circ(g, ls[i].family(), ls[j].family());
            ++cases;
            failures += !is_maximal_linked(f);
            route_failures += t.index_of(f) != std::optional<Index>(t.table()(i, j));
          }
        }
      }
      checks.push_back(property("circ of maximal linked systems is maximal linked, "
                                "|G| <= 5",
                                cases, failures));
      checks.push_back(property("Cayley table equals pointwise circ, |G| <= 5",
                                cases, route_failures));

      // A sampled pass over the definition itself.
      cases = failures = 0;
      std::mt19937_64 rng(11);
      for (auto const* name : {"C4", "C5"}) {
        auto const  g  = build_group(name);
        auto const& ls = ctx.lambda(name).elements();
        std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
        for (int i = 0; i < 200; ++i) {
          auto const& a = ls[pick(rng)];
          auto const& b = ls[pick(rng)];
          auto const  f = circ(g, a.family(), b.family());
          for (Mask c = 0; c <= g.full(); ++c) {
            ++cases;
            failures += f.contains(c)
                        != oracle::circ_contains(g, a.minimal_sets(),
                                                 b.minimal_sets(), c);
          }
        }
      }
      checks.push_back(property("circ membership equals the definition", cases,
                                failures));
    }

    void embedding(Context&, std::vector<Check>& checks) {
      std::size_t cases = 0, failures = 0;
      for (auto const& name : groups_of_order_at_most(6)) {
        auto const g = build_group(name);
        for (Elem x = 0; x < g.order(); ++x) {
          for (Elem y = 0; y < g.order(); ++y) {
            ++cases;
            failures += circ(g, principal_ultrafilter(g, x), principal_ultrafilter(g, y))
                        != principal_ultrafilter(g, g.mul(x, y));
          }
        }
      }
      checks.push_back(
          property("principal ultrafilters multiply like G, |G| <= 6", cases, failures));
    }

    void right_zero_characterization(Context& ctx, std::vector<Check>& checks) {
      std::size_t cases = 0, failures = 0;
      for (auto const& name : groups_of_order_at_most(6)) {
        auto const g = build_group(name);
        if (!ctx.builds_tables_of_order(g.order())) {
          continue;
        }
        auto const&        t = ctx.lambda(name);
        std::vector<Index> invariant;
        for (Index i = 0; i < t.size(); ++i) {
          bool fixed = true;
          for (Elem x = 0; x < g.order(); ++x) {
            fixed = fixed && t.shift(x, i) == i;
          }
          if (fixed) {
            invariant.push_back(i);
          }
        }
        ++cases;
        failures += right_zeros(t.table()) != invariant;
      }
      checks.push_back(property("right zeros are the shift-invariant systems",
                                cases, failures));
    }

    void rectangularity(Context&, std::vector<Check>& checks) {
      std::size_t cases = 0, failures = 0;
      for (auto const& name : groups_of_order_at_most(8)) {
        auto const                       g = build_group(name);
        std::vector<MaximalLinkedSystem> members;
        for (auto const& s : enumerate_invariant_mls(g)) {
          if (is_maximal_linked(s.family)) {
            members.emplace_back(s.family);
          }
        }
        for (auto const& a : members) {
          for (auto const& b : members) {
            ++cases;
            failures += circ(g, a, b) != b;
          }
        }
      }
      checks.push_back(property("invariant maximal linked systems multiply "
                                "rectangularly, |G| <= 8",
                                cases, failures));
    }

    void enumeration_oracles(Context&, std::vector<Check>& checks) {
      for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<oracle::Antichain> computed;
        for (auto const& l : enumerate_mls(n)) {
          computed.push_back(l.minimal_sets());
        }
        checks.push_back(make_check("enumerate_mls(" + std::to_string(n)
                                        + ") equals the antichain oracle",
                                    oracle::maximal_linked_systems(n), computed));
      }
      for (auto const& name : groups_of_order_at_most(5)) {
        auto const                     g = build_group(name);
        std::vector<oracle::Antichain> computed;
        for (auto const& s : enumerate_invariant_mls(g)) {
          computed.push_back(s.family.minimal_sets());
        }
        std::sort(computed.begin(), computed.end());
        checks.push_back(make_check("invariant systems of " + name
                                        + " equal the shift-closed family oracle",
                                    oracle::invariant_linked_systems(g), computed));
      }
    }

    void properties(Context& ctx, std::vector<Check>& checks) {
      associativity(ctx, checks);
      involution(ctx, checks);
      closure_and_routes(ctx, checks);
      embedding(ctx, checks);
      right_zero_characterization(ctx, checks);
      rectangularity(ctx, checks);
      enumeration_oracles(ctx, checks);
    }

    using Runner = void (*)(Context&, std::vector<Check>&);

    constexpr std::array<Runner, kCriterionCount> kRunners = {
        lambda_counts, orbit_counts, sl_table,     invariant_counts, two_to_the_s,
        c5_structure,  t17_table,    isomorphisms, equivalences,     properties,
    };

  }  // namespace

  std::string_view title(int id) {
    if (id < 1 || id > kCriterionCount) {
      throw DomainError("no acceptance criterion " + std::to_string(id));
    }
    return kSpecs[id - 1].title;
  }

  std::int64_t time_limit_ms(int id) {
    title(id);
    return kSpecs[id - 1].limit_ms;
  }

  CriterionResult run_criterion(int id, Context& ctx) {
    CriterionResult r{id, std::string(title(id)), {}, 0, time_limit_ms(id), {}};
    auto const      start = std::chrono::steady_clock::now();
    try {
      kRunners[id - 1](ctx, r.checks);
    } catch (std::exception const& e) {
      r.error = e.what();
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
  }

  std::vector<CriterionResult> run_all(Context& ctx) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
      out.push_back(run_criterion(id, ctx));
    }
    return out;
  }

  ordered_json to_json(CriterionResult const& r) {
    ordered_json checks = ordered_json::array();
    for (auto const& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"match", c.match}});
    }
    ordered_json j{{"criterion", r.id},
                   {"title", r.title},
                   {"passed", r.passed()},
                   {"elapsed_ms", r.elapsed_ms},
                   {"limit_ms", r.limit_ms},
                   {"checks", std::move(checks)}};
    if (!r.error.empty()) {
      j["error"] = r.error;
    }
    return j;
  }

  NonCommutingPair c2_cubed_witness() {
    auto const g = build_group("C2xC2xC2");
    // (x, y, z) -> 4x + 2y + z, so the product is bitwise xor.
    Elem const a = 4, b = 2, c = 1;
    Elem const e = FiniteGroup::identity;
    auto const set = [](std::initializer_list<Elem> xs) {
      Mask m = 0;
      for (auto x : xs) {
        m |= singleton(x);
      }
      return m;
    };
    Mask const base = set({e, a, b, g.mul(a, g.mul(b, c))});
    Mask const h1   = set({e, a, b, g.mul(a, b)});
    Mask const h2   = set({e, a, g.mul(b, c), g.mul(a, g.mul(b, c))});

    auto const extend = [&](Mask h) {
      std::vector<Mask> gens = {h1, h2};
      for (auto x : elements_of(h)) {
        gens.push_back(g.translate(static_cast<Elem>(x), base));
      }
      return extend_to_maximal_linked(SetFamily::generate(g.order(), gens));
    };
    auto       first  = extend(h1);
    auto       second = extend(h2);
    Mask const bc_a   = g.translate(g.mul(b, c), base);
    Mask const b_a    = g.translate(b, base);
    bool const holds  = circ(g, first, second).contains(bc_a)
                       && circ(g, second, first).contains(b_a) && (bc_a & b_a) == 0;
    return {std::move(first), std::move(second), bc_a, b_a, holds};
  }

}  // namespace superx::verify
