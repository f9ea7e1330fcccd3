#include "isokit/common.hpp"

#include <cstdlib>
#include <limits>

namespace isokit {

std::uint64_t default_cap() {
  if (const char* env = std::getenv("ISOTROPY_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    b *= b;
    exp >>= 1U;
  }
  return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t pow_saturating(std::uint64_t base, std::uint64_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

}  // namespace isokit
