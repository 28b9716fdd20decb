#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace superx {

  // A subset of a ground set {0, ..., n-1}, n <= kMaxGround; element i is
  // present iff bit i is set.
  using Mask = std::uint32_t;

  inline constexpr std::size_t kMaxGround = 16;

  constexpr Mask full_mask(std::size_t n) noexcept {
    return n >= 32 ? ~Mask{0} : static_cast<Mask>((Mask{1} << n) - 1);
  }

  constexpr Mask singleton(std::size_t i) noexcept {
    return Mask{1} << i;
  }

  constexpr int cardinality(Mask m) noexcept {
    return std::popcount(m);
  }

  constexpr bool is_subset(Mask a, Mask b) noexcept {
    return (a & ~b) == 0;
  }

  constexpr bool has(Mask m, std::size_t i) noexcept {
    return (m >> i) & 1U;
  }

  // Elements of m in increasing order.
  std::vector<std::size_t> elements_of(Mask m);

  // "{0,2,3}"
  std::string mask_to_string(Mask m);

  // Calls f(mask) for every k-element subset of {0, ..., n-1} in increasing
  // numeric order (Gosper's hack).
  template <typename F>
  void for_each_k_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) {
      return;
    }
    if (k == 0) {
      f(Mask{0});
      return;
    }
    std::uint64_t       m     = (std::uint64_t{1} << k) - 1;
    std::uint64_t const limit = std::uint64_t{1} << n;
    while (m < limit) {
      f(static_cast<Mask>(m));
      std::uint64_t const c = m & (~m + 1);
      std::uint64_t const r = m + c;
      m                     = (((r ^ m) >> 2) / c) | r;
    }
  }

  // The first k-subset, in the order of for_each_k_subset, satisfying pred.
  template <typename Pred>
  std::optional<Mask> find_k_subset(std::size_t n, std::size_t k, Pred&& pred) {
    if (k > n) {
      return std::nullopt;
    }
    if (k == 0) {
      return pred(Mask{0}) ? std::optional<Mask>(0) : std::nullopt;
    }
    std::uint64_t       m     = (std::uint64_t{1} << k) - 1;
    std::uint64_t const limit = std::uint64_t{1} << n;
    while (m < limit) {
      if (pred(static_cast<Mask>(m))) {
        return static_cast<Mask>(m);
      }
      std::uint64_t const c = m & (~m + 1);
      std::uint64_t const r = m + c;
      m                     = (((r ^ m) >> 2) / c) | r;
    }
    return std::nullopt;
  }

}  // namespace superx
