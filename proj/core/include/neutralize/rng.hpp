#pragma once

#include <cstdint>
#include <random>

#include "neutralize/checked.hpp"

namespace neutralize {

/// Seeded generator with a platform-independent integer stream.
///
/// std::mt19937_64's raw output is fixed by the standard, but
/// std::uniform_int_distribution is not, so bounded draws use rejection
/// sampling on the raw words instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi]; requires lo <= hi.
  Weight uniform(Weight lo, Weight hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == UINT64_MAX) return static_cast<Weight>(next());
    const std::uint64_t bound = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return static_cast<Weight>(static_cast<std::uint64_t>(lo) + r % bound);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace neutralize
