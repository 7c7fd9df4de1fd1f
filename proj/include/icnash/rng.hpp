#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace icnash {

// Deterministic random source. All draws are produced from explicit bit
// manipulation of the mt19937_64 output so that streams are reproducible
// across platforms (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw in [0, 1) with 53 bits of resolution.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Exponential draw with mean 1.
  double next_exp() { return -std::log1p(-next_unit()); }

 private:
  std::mt19937_64 engine_;
};

// Counter-derived substream seed: independent streams for (stream, index)
// pairs under one master seed. splitmix64-style finalizer.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  };
  std::uint64_t h = mix(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return mix(h ^ (0xd1b54a32d192ed03ULL * (index + 1)));
}

}  // namespace icnash
