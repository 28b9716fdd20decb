#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "superx/commands.hpp"
#include "superx/error.hpp"

namespace {

  enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kCapacity = 3 };

  int exit_code(superx::Report const& r) {
    return r.status == superx::Status::fail ? kMismatch : kOk;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superextensions of small finite groups"};
  app.require_subcommand(1);

  std::string format_text = "text";
  std::string cache_dir;
  bool        no_cache    = false;
  bool        allow_large = false;
  app.add_option("--format", format_text, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", cache_dir,
                 "Cache directory (default: $SUPERX_CACHE_DIR or ~/.cache/superx)");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the cache");
  app.add_flag("--allow-large", allow_large,
               "Raise size limits (lambda counts to |G| = 7, invariant systems to |G| = 10)");
  app.fallthrough();

  std::size_t max_order = 13;
  auto* sl_table = app.add_subcommand("sl-table", "sl(G) for every catalog group");
  sl_table->add_option("--max-order", max_order, "Largest group order (<= 15)")
      ->check(CLI::Range(2, 15));

  std::string group;
  std::string what = "count";
  auto* lambda = app.add_subcommand("lambda", "Superextension counts, tables and structure");
  lambda->add_option("group", group, "Group name, e.g. C5, C2xC2, D6, Q8")->required();
  lambda->add_option("--what", what, "count, table or structure")
      ->check(CLI::IsMember({"count", "table", "structure"}));

  auto* invariant = app.add_subcommand("invariant", "Maximal invariant linked systems");
  invariant->add_option("group", group, "Group name")->required();

  auto* t17 = app.add_subcommand("c5-t17", "Products of the 17 named systems on C5");

  std::string scope = "all";
  auto* verify = app.add_subcommand("verify-paper", "Run every acceptance check");
  verify->add_option("scope", scope, "all or fast")
      ->check(CLI::IsMember({"all", "fast"}));

  std::size_t max_n = 16;
  auto* explore = app.add_subcommand("explore-sl", "sl(C_n) against the lower bound");
  explore->add_option("--max-n", max_n, "Largest n (<= 16)")->check(CLI::Range(1, 16));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kUsage;
  }

  try {
    std::optional<superx::Cache> cache;
    if (!no_cache) {
      cache.emplace(cache_dir.empty() ? superx::Cache::default_directory()
                                      : std::filesystem::path(cache_dir));
    }
    superx::CommandOptions const options{allow_large, cache ? &*cache : nullptr};
    auto const                   format = superx::parse_format(format_text);

    superx::Report report;
    if (*sl_table) {
      report = superx::cmd_sl_table(max_order);
    } else if (*lambda) {
      report = superx::cmd_lambda(group, superx::parse_lambda_query(what), options);
    } else if (*invariant) {
      report = superx::cmd_invariant(group, options);
    } else if (*t17) {
      report = superx::cmd_c5_t17();
    } else if (*verify) {
      report = superx::cmd_verify_paper(superx::verify::parse_scope(scope), options);
    } else if (*explore) {
      report = superx::cmd_explore_sl(max_n);
    }
    std::cout << superx::render(report, format);
    return exit_code(report);
  } catch (superx::CapacityError const& e) {
    std::cerr << "superx: " << e.what() << '\n';
    return kCapacity;
  } catch (superx::ParseError const& e) {
    std::cerr << "superx: " << e.what() << '\n';
    return kUsage;
  } catch (superx::DomainError const& e) {
    std::cerr << "superx: " << e.what() << '\n';
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "superx: " << e.what() << '\n';
    return kMismatch;
  }
}
