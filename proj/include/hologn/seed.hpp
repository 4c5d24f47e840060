#pragma once

// Counter-mode SplitMix64 streams. Every random bit in the project flows
// from a (master, stream) pair; the same pair always yields the same bits,
// on every platform.

#include <cstdint>

namespace hologn {

inline constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ull;

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  // Key identifying this substream; distinct (master, stream) pairs map to
  // well-separated keys.
  [[nodiscard]] constexpr std::uint64_t key() const {
    return mix64(master + kSplitMixGamma * (stream + 1));
  }

  // Child seed for substream `index`. Folds the current stream into the
  // master so derive chains never collide with sibling streams.
  [[nodiscard]] constexpr Seed derive(std::uint64_t index) const {
    return Seed{key(), index};
  }

  constexpr bool operator==(const Seed&) const = default;
};

// Random-access generator over one stream: word i is a pure function of
// (key, i), so sequences can be regenerated or consumed out of order.
class CounterRng {
 public:
  explicit constexpr CounterRng(Seed seed) : key_(seed.key()) {}

  constexpr std::uint64_t next() { return mix64(key_ + kSplitMixGamma * ++counter_); }

  [[nodiscard]] constexpr std::uint64_t word_at(std::uint64_t index) const {
    return mix64(key_ + kSplitMixGamma * (index + 1));
  }

  // Uniform integer in [0, bound) via rejection; bound > 0.
  constexpr std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~0ull / bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hologn
