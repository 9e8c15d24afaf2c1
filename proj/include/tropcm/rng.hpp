#pragma once

#include <cstdint>
#include <random>

namespace tropcm {

/// Seeded generator whose draws are identical on every standard library:
/// mt19937_64 output is fully specified, and bounded draws use rejection
/// sampling instead of std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Deterministic seed derivation (splitmix64 of the pair).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace tropcm
