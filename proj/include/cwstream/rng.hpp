#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cwstream::rng {

// SplitMix64 finalizer. Bijective on 64-bit words, good avalanche; used as
// the mixing stage of all keyed draws below.
inline constexpr std::uint64_t mix(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t hash2(std::uint64_t a, std::uint64_t b) noexcept {
  return mix(mix(a) ^ b);
}

inline constexpr std::uint64_t hash3(std::uint64_t a, std::uint64_t b,
                                     std::uint64_t c) noexcept {
  return mix(hash2(a, b) ^ c);
}

// Uniform double in [0, 1) from the top 53 bits of a hash.
inline constexpr double u01(std::uint64_t h) noexcept {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Bernoulli(p) draw keyed on (seed, key). p >= 1 always fires, p <= 0 never.
inline constexpr bool bernoulli(std::uint64_t seed, std::uint64_t key, double p) noexcept {
  return u01(hash2(seed, key)) < p;
}

// Counter-based coin: repeated invocations are independent and the whole
// sequence is reproducible from (seed, instance).
class Coin {
 public:
  Coin(std::uint64_t seed, std::uint64_t instance) noexcept
      : seed_(seed), instance_(instance) {}

  bool flip(double p) noexcept { return u01(hash3(seed_, instance_, draws_++)) < p; }

  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::uint64_t seed_;
  std::uint64_t instance_;
  std::uint64_t draws_ = 0;
};

// xoshiro-free portable integer helpers for generators: std::uniform_int_distribution
// is not bit-stable across standard libraries, so generators draw through these.
template <class Engine>
std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
  // Unbiased rejection sampling from the engine's full 64-bit output.
  const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  for (;;) {
    const std::uint64_t r = eng();
    if (r < limit) return r % bound;
  }
}

template <class Engine, class T>
void shuffle(Engine& eng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(eng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace cwstream::rng
