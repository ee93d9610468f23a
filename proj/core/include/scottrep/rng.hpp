#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

namespace scottrep {

// Seeded generator with platform-independent helpers (the standard
// distributions are implementation-defined, which would break
// seed-reproducible reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound must be positive.
  std::size_t below(std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % b);
  }

  // Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  // A child generator, so sub-computations draw from independent streams.
  Rng split() { return Rng(engine_() ^ 0x5851f42d4c957f2dULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace scottrep
