#pragma once

#include <cstddef>
#include <string_view>

#include "superx/cache.hpp"
#include "superx/report.hpp"
#include "superx/verify.hpp"

namespace superx {

  struct CommandOptions {
    bool         allow_large = false;
    Cache const* cache       = nullptr;
  };

  enum class LambdaQuery { count, table, structure };

  // Throws ParseError.
  LambdaQuery parse_lambda_query(std::string_view text);

  // sl(G) for every catalog group of order 2..max_order (<= 15), against the
  // reference values where they exist.
  Report cmd_sl_table(std::size_t max_order = 13);

  // count: |lambda(G)| and |lambda(G)/G|; table: the serialized Cayley table;
  // structure: idempotents, zeros, ideals, maximal groups, centre.
  Report cmd_lambda(std::string_view      group,
                    LambdaQuery           what,
                    CommandOptions const& options = {});

  Report cmd_invariant(std::string_view group, CommandOptions const& options = {});

  Report cmd_c5_t17();

  Report cmd_verify_paper(verify::Scope scope, CommandOptions const& options = {});

  // sl(C_n) against the lower bound for n = 1..max_n (<= 16).
  Report cmd_explore_sl(std::size_t max_n = 16);

}  // namespace superx
