#pragma once

/// Closed-form extremal quantities for alternating and general multilinear
/// maps over algebraically closed fields. All arithmetic is exact.

#include <cstdint>
#include <optional>
#include <string>

#include "isokit/common.hpp"

namespace isokit::formulas {

struct ParamSet {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
  /// Selects the characteristic-zero branch for m = 1.
  bool char_zero = false;
};

/// A formula value together with the branch of the piecewise definition
/// that produced it: "generic", "exceptional:<which>", or "scan".
struct Evaluation {
  BigInt value;
  std::string branch = "generic";
};

/// max { s in [0, n] : s(n - s) >= m C(s, d) }
std::int64_t k0(std::int64_t n, std::int64_t d, std::int64_t m);

/// alpha_Lambda(F, n, d, m) for algebraically closed F. For m = 1 the value
/// is asserted only in characteristic 0; without char_zero this throws.
Evaluation alpha_alt_closed(std::int64_t n, std::int64_t d, std::int64_t m, bool char_zero);

/// Feldman-Propp number: least n with alpha_alt_closed(n, d, m) >= k.
Evaluation fp_number(std::int64_t d, std::int64_t m, std::int64_t k, bool char_zero);

/// Turan number: least r >= 1 with alpha_alt_closed(n, d, r) <= k.
Evaluation turan_number(std::int64_t n, std::int64_t d, std::int64_t k, bool char_zero);

/// Gow-Quinlan number max{0, d(n - d)} + 1.
BigInt gq_number(std::int64_t n, std::int64_t d);

enum class Verdict { holds, strict, violated };

std::string to_string(Verdict v);

struct IntersectionReport {
  Verdict verdict = Verdict::holds;
  BigInt lhs;  // l(n + l - 2k)
  BigInt rhs;  // m C(l, d)
  bool strict_hypothesis = false;  // k(n - k) > m C(k, d)
};

/// Both sides of l(n + l - 2k) >= m C(l, d) under the hypotheses
/// n + l - 2k >= 0, n > k >= l >= d >= 2, m >= 2, k(n - k) >= m C(k, d);
/// throws PreconditionError when they fail.
IntersectionReport lemma35_check(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t l);

/// True iff (m, n, k, d, l) satisfies the hypotheses of lemma35_check.
bool lemma35_admissible(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t l);

/// d(n - 2) >= m 2^{d-1}
bool thm13_predicate(std::int64_t n, std::int64_t d, std::int64_t m);

struct CpzExponent {
  BigRational exponent;  // d - m/n
  bool admissible = false;  // d(n - 1) > (2^d - 1) m
};

CpzExponent cpz_exponent(std::int64_t n, std::int64_t d, std::int64_t m);

}  // namespace isokit::formulas
