#pragma once

#include <cstdint>
#include <random>

namespace eincausal {

/// Counted seed splitting: all randomness in the library flows from one
/// root seed; independent tasks draw from split_seed(seed, task_index).
inline uint64_t split_seed(uint64_t seed, uint64_t stream) {
  // splitmix64 over the combined state.
  uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic generator with stdlib-independent distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Uniform integer in [a, b] inclusive.
  int uniform_int(int a, int b) {
    const uint64_t span = static_cast<uint64_t>(b - a) + 1;
    return a + static_cast<int>(next() % span);
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eincausal
