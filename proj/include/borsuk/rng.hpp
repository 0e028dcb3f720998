#pragma once

#include <cstdint>
#include <random>

namespace borsuk {

/// SplitMix64 step; used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed for sub-stream `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// The project's only PRNG: std::mt19937_64 (fully specified by the C++
/// standard) with hand-written range mappings, since the standard
/// distributions are implementation-defined. Streams are stable across
/// platforms and versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Standard normal via Box-Muller (no cached second variate).
  double normal();
  bool coin() { return (next() >> 63) != 0; }
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace borsuk
