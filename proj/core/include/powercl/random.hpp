#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace powercl {

// Seeded generator with draws that do not depend on the standard library's
// distribution implementations, so a seed reproduces the same stream on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    auto limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(denominator) - 1)) <
           numerator;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace powercl
