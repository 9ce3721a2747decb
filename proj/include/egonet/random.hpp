#pragma once

#include <cstdint>
#include <random>

namespace egonet {

// The standard library distributions are implementation-defined, so every
// draw here is derived from raw mt19937_64 output, whose sequence is fixed by
// the standard. Streams are therefore identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), rejection sampled; bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Failures before the first success of a Bernoulli(1 - p) trial sequence,
  /// i.e. a geometric count with mean p / (1 - p).
  std::uint64_t geometric_failures(double p) {
    std::uint64_t count = 0;
    while (bernoulli(p)) ++count;
    return count;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace egonet
