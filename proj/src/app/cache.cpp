#include "superx/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "superx/error.hpp"

namespace superx {

  namespace fs = std::filesystem;

  std::uint64_t fnv1a(std::string_view data) noexcept {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  namespace {

    std::string hex(std::uint64_t v) {
      std::ostringstream out;
      out << std::hex;
      out.width(16);
      out.fill('0');
      out << v;
      return out.str();
    }

    // Group names may contain ':' (C3:C4).
    std::string file_stem(std::string_view group) {
      std::string s(group);
      for (char& c : s) {
        if (c == ':' || c == '/' || c == '\\') {
          c = '-';
        }
      }
      return s;
    }

    std::string header(std::string_view group,
                       std::string_view kind,
                       std::string_view payload) {
      return std::string(Cache::kFormat) + ' ' + std::string(group) + ' '
             + std::string(kind) + ' ' + hex(fnv1a(payload));
    }

  }  // namespace

  Cache::Cache(fs::path directory) : _dir(std::move(directory)) {}

  fs::path Cache::default_directory() {
    if (char const* dir = std::getenv("SUPERX_CACHE_DIR"); dir && *dir) {
      return dir;
    }
    if (char const* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
      return fs::path(xdg) / "superx";
    }
    if (char const* home = std::getenv("HOME"); home && *home) {
      return fs::path(home) / ".cache" / "superx";
    }
    return fs::temp_directory_path() / "superx-cache";
  }

  fs::path Cache::path_for(std::string_view group, std::string_view kind) const {
    return _dir / (file_stem(group) + '.' + std::string(kind) + ".v1");
  }

  std::optional<std::string> Cache::load(std::string_view group,
                                         std::string_view kind) const {
    std::ifstream in(path_for(group, kind), std::ios::binary);
    if (!in) {
      return std::nullopt;
    }
    std::string first;
    if (!std::getline(in, first)) {
      return std::nullopt;
    }
    std::ostringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    if (first != header(group, kind, payload)) {
      return std::nullopt;
    }
    return payload;
  }

  void Cache::store(std::string_view group,
                    std::string_view kind,
                    std::string_view payload) const {
    static std::atomic<unsigned> counter{0};
    fs::create_directories(_dir);
    fs::path const target = path_for(group, kind);
    fs::path const tmp    = target.string() + ".tmp."
                         + std::to_string(::getpid()) + '.'
                         + std::to_string(counter++);
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << header(group, kind, payload) << '\n' << payload;
      out.flush();
      if (!out) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw Error("cannot write cache file " + tmp.string());
      }
    }
    fs::rename(tmp, target);
  }

  std::string_view to_string(CacheOutcome o) noexcept {
    switch (o) {
      case CacheOutcome::disabled:
        return "disabled";
      case CacheOutcome::hit:
        return "hit";
      case CacheOutcome::miss:
        return "miss";
      case CacheOutcome::rejected:
        return "rejected";
    }
    return "disabled";
  }

  LambdaTable cached_lambda_table(FiniteGroup const& g,
                                  Cache const*       cache,
                                  CacheOutcome*      outcome) {
    auto report = [&](CacheOutcome o) {
      if (outcome != nullptr) {
        *outcome = o;
      }
    };
    if (cache == nullptr) {
      report(CacheOutcome::disabled);
      return build_lambda_table(g);
    }
    bool const present = fs::exists(cache->path_for(g.name(), "table"));
    if (auto payload = cache->load(g.name(), "table")) {
      try {
        auto t = parse_table(*payload);
        if (t.group().name() == g.name() && t.group().table() == g.table()) {
          report(CacheOutcome::hit);
          return t;
        }
      } catch (Error const&) {
        // checksum matched but the content is unusable; rebuild below
      }
    }
    report(present ? CacheOutcome::rejected : CacheOutcome::miss);
    auto t = build_lambda_table(g);
    cache->store(g.name(), "table", serialize_table(t));
    return t;
  }

}  // namespace superx
