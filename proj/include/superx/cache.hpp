#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "superx/superextension.hpp"

namespace superx {

  // 64-bit FNV-1a.
  std::uint64_t fnv1a(std::string_view data) noexcept;

  // On-disk store for expensive artifacts. Each file is
  //
  //   superx-cache v1 <group> <kind> <checksum>
  //   <payload>
  //
  // where the checksum is the FNV-1a hash of the payload in hex. Files are
  // written to a temporary name and renamed into place.
  class Cache {
   public:
    static constexpr std::string_view kFormat = "superx-cache v1";

    explicit Cache(std::filesystem::path directory);

    // SUPERX_CACHE_DIR, else $XDG_CACHE_HOME/superx, else ~/.cache/superx,
    // else a directory under the system temp path.
    static std::filesystem::path default_directory();

    std::filesystem::path const& directory() const noexcept {
      return _dir;
    }

    std::filesystem::path path_for(std::string_view group,
                                   std::string_view kind) const;

    // The stored payload, or nullopt if the file is missing, has a foreign
    // header, or fails its checksum.
    std::optional<std::string> load(std::string_view group,
                                    std::string_view kind) const;

    void store(std::string_view group,
               std::string_view kind,
               std::string_view payload) const;

   private:
    std::filesystem::path _dir;
  };

  enum class CacheOutcome { disabled, hit, miss, rejected };

  std::string_view to_string(CacheOutcome o) noexcept;

  // lambda(G), read from the cache when a valid entry exists and rebuilt
  // (and stored) otherwise. `cache` may be null.
  LambdaTable cached_lambda_table(FiniteGroup const& g,
                                  Cache const*       cache,
                                  CacheOutcome*      outcome = nullptr);

}  // namespace superx
