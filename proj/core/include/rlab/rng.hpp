#pragma once

// Counter-based pseudo-random stream.
//
// Every draw is a pure function of (key, counter): word(key, c) applies the
// SplitMix64 finalizer to key + (c + 1) * 0x9E3779B97F4A7C15. Keys are derived
// from user seeds with the same finalizer, so any reimplementation of these
// few lines reproduces generated graphs and samples bit for bit.

#include <cstdint>
#include <string_view>

namespace rlab {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t counter_word(std::uint64_t key,
                                     std::uint64_t counter) noexcept {
  return splitmix64(key + (counter + 1) * kGolden);
}

// 53-bit uniform in [0, 1).
constexpr double to_unit(std::uint64_t word) noexcept {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

constexpr std::uint64_t seed_key(std::uint64_t seed) noexcept {
  return splitmix64(seed ^ kGolden);
}

// Key for a named sub-stream, e.g. (seed, "complement", instance index).
constexpr std::uint64_t stream_key(std::uint64_t seed, std::string_view name,
                                   std::uint64_t index) noexcept {
  return splitmix64(seed_key(seed) ^ splitmix64(fnv1a64(name) + index * kGolden));
}

class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}

  constexpr std::uint64_t next() noexcept { return counter_word(key_, counter_++); }
  constexpr double uniform() noexcept { return to_unit(next()); }
  constexpr bool bernoulli(double p) noexcept { return uniform() < p; }

  // Uniform in [0, bound) by 128-bit multiply-shift; bound must be > 0.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [lo, hi].
  constexpr std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + below(hi - lo + 1);
  }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace rlab
