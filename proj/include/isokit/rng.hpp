#pragma once

#include <cstdint>

namespace isokit {

/// splitmix64: a fully specified generator, so seeded searches reproduce
/// bit-for-bit on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
  }

  /// Uniform value in [0, bound) by rejection on ceil(log2 bound) low bits.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    unsigned bits = 0;
    while ((std::uint64_t{1} << bits) < bound) ++bits;
    const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    for (;;) {
      const std::uint64_t x = next() & mask;
      if (x < bound) return x;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace isokit
