#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace isokit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised when an operation's preconditions are not met (CLI exit code 2).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured cap (CLI exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a checked mathematical invariant fails (CLI exit code 4).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// Default enumeration cap, honoring the ISOTROPY_CAP environment variable.
std::uint64_t default_cap();

BigInt big_pow(std::uint64_t base, std::uint64_t exp);
BigInt binomial(std::int64_t n, std::int64_t k);

/// Saturating integer power; returns UINT64_MAX on overflow.
std::uint64_t pow_saturating(std::uint64_t base, std::uint64_t exp);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace isokit
