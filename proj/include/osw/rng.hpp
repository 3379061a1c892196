#pragma once

#include <cstdint>

namespace osw {

// 64-bit finalizer from splitmix64 (Steele, Lea, Flood / Vigna). Bijective
// avalanche mix used both as the generator output function and for seed
// derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// splitmix64: state walks by the golden gamma, output is mix64 of the state.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Deterministic substream derivation: the stream for (seed, key) starts at
// state mix64(seed + (key+1)*gamma). Streams for distinct keys are
// scrambled phases of the splitmix64 cycle, so drawing from one substream
// never depends on how many values other substreams consumed. This is what
// makes vertex- or trial-parallel sampling order-independent.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
  return mix64(seed + kGoldenGamma * (key + 1));
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t key) {
  return SplitMix64(derive_seed(seed, key));
}

}  // namespace osw
