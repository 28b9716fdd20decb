#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "superx/cache.hpp"
#include "superx/superextension.hpp"

namespace superx::verify {

  enum class Scope { fast, all };

  // Throws ParseError.
  Scope parse_scope(std::string_view text);

  struct Check {
    std::string            name;
    nlohmann::ordered_json expected;
    nlohmann::ordered_json computed;
    bool                   match;
  };

  struct CriterionResult {
    int                id;
    std::string        title;
    std::vector<Check> checks;
    std::int64_t       elapsed_ms = 0;
    std::int64_t       limit_ms   = 0;  // 0: no time limit
    std::string        error;          // exception text, if the run threw

    bool within_limit() const noexcept {
      return limit_ms == 0 || elapsed_ms <= limit_ms;
    }
    bool passed() const noexcept;
    std::size_t mismatches() const noexcept;
  };

  // Shared state for one verification run: lambda(G) tables are built once
  // (through the cache, when one is given) and reused across criteria.
  class Context {
   public:
    explicit Context(Scope scope, Cache const* cache = nullptr)
        : _scope(scope), _cache(cache) {}

    Scope scope() const noexcept {
      return _scope;
    }

    // Whether lambda(G) tables of this order are built in this scope.
    bool builds_tables_of_order(std::size_t n) const noexcept {
      return n < 6 || _scope == Scope::all;
    }

    LambdaTable const& lambda(std::string const& group);

   private:
    Scope                                               _scope;
    Cache const*                                        _cache;
    std::map<std::string, std::unique_ptr<LambdaTable>> _tables;
  };

  inline constexpr int kCriterionCount = 10;

  std::string_view title(int id);
  std::int64_t     time_limit_ms(int id);

  // Throws DomainError for ids outside [1, 10]; exceptions raised while
  // checking are caught and recorded in `error`.
  CriterionResult run_criterion(int id, Context& ctx);

  std::vector<CriterionResult> run_all(Context& ctx);

  nlohmann::ordered_json to_json(CriterionResult const& r);

  // The two maximal linked systems on C2^3 whose products in both orders
  // contain disjoint sets, so they do not commute.
  struct NonCommutingPair {
    MaximalLinkedSystem first;
    MaximalLinkedSystem second;
    Mask                in_first_second;  // bcA, a member of first o second
    Mask                in_second_first;  // bA, a member of second o first
    bool                holds;            // both memberships and disjointness
  };

  NonCommutingPair c2_cubed_witness();

}  // namespace superx::verify
