#include "isokit/formulas.hpp"

namespace isokit::formulas {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// ceil(a / b) for b > 0
BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b < a) ++q;
  return q;
}

}  // namespace

std::int64_t k0(std::int64_t n, std::int64_t d, std::int64_t m) {
  require(n >= 1 && d >= 1 && m >= 0, "k0 needs n, d >= 1 and m >= 0");
  require(n <= (std::int64_t{1} << 31), "k0 needs n <= 2^31");
  if (m == 0) return n;
  // C(s, d) is built incrementally in 128 bits. It never decreases, and
  // s(n - s) <= n^2 / 4, so once m C(s, d) passes n^2 / 4 no larger s can
  // qualify and the scan stops before any overflow.
  __extension__ typedef unsigned __int128 Wide;
  const Wide ceiling = static_cast<Wide>(n) * static_cast<Wide>(n) / 4;
  Wide c = 0;
  std::int64_t best = 0;
  for (std::int64_t s = 0; s <= n; ++s) {
    if (s == d)
      c = 1;
    else if (s > d)
      c = c * static_cast<Wide>(s) / static_cast<Wide>(s - d);
    if (c > 0 && static_cast<Wide>(m) > ceiling / c) break;
    const Wide rhs = static_cast<Wide>(m) * c;
    if (static_cast<Wide>(s) * static_cast<Wide>(n - s) >= rhs) best = s;
  }
  return best;
}

Evaluation alpha_alt_closed(std::int64_t n, std::int64_t d, std::int64_t m, bool char_zero) {
  require(n >= 1 && d >= 1 && m >= 1, "alpha_alt_closed needs n, d, m >= 1");
  if (m >= 2) return {k0(n, d, m), "generic"};
  require(char_zero, "the m = 1 value is only established in characteristic 0; pass char_zero");
  if (d == 2) return {n / 2, "exceptional:d=2"};
  if (d == 3 && n == 7) return {4, "exceptional:(3,7)"};
  if (d == n - 2 && d % 2 == 0) return {n - 2, "exceptional:d=n-2-even"};
  return {k0(n, d, 1), "generic"};
}

Evaluation fp_number(std::int64_t d, std::int64_t m, std::int64_t k, bool char_zero) {
  require(d >= 1 && k >= 1 && m >= 1, "fp_number needs d, m, k >= 1");
  if (m >= 2) return {ceil_div(m * binomial(k, d), k) + k, "generic"};
  require(char_zero, "the m = 1 value is only established in characteristic 0; pass char_zero");
  if (d == 2) return {BigInt(2 * k), "exceptional:d=2"};
  BigInt n = ceil_div(binomial(k, d), k) + k;
  // The generic display can land on an n where alpha drops below k0 (the
  // (3,7) and d = n-2 rows); the least admissible n is then one further on.
  Evaluation out{n, "generic"};
  for (;;) {
    const auto alpha = alpha_alt_closed(static_cast<std::int64_t>(out.value), d, 1, true);
    if (alpha.value >= k) break;
    out.branch = alpha.branch;
    ++out.value;
  }
  return out;
}

Evaluation turan_number(std::int64_t n, std::int64_t d, std::int64_t k, bool char_zero) {
  require(n >= 1 && k >= 1 && d >= 2, "turan_number needs n, k >= 1 and d >= 2");
  const char* which = nullptr;
  if (d == 2 && n / 2 <= k)
    which = "d=2";
  else if (d == 3 && n == 7 && k >= 4)
    which = "(3,7)";
  else if (d == n - 2 && n % 2 == 0 && n - 2 <= k)
    which = "d=n-2-even";
  if (which != nullptr) {
    require(char_zero, std::string("exceptional case ") + which + " requires characteristic 0");
    return {1, std::string("exceptional:") + which};
  }
  const BigInt denom = binomial(k + 1, d);
  if (denom == 0) {
    // C(k+1, d) = 0: the display does not apply. Every map keeps an isotropic
    // subspace of dimension min(d-1, n), so a finite value exists only when
    // n <= k, where r = 1 already works.
    if (n <= k) return {1, "scan"};
    throw PreconditionError("no codomain dimension forces the isotropy index down to k < d - 1");
  }
  const BigInt num = BigInt(k + 1) * (n - k - 1);
  BigInt q = num >= 0 ? num / denom : BigInt(0);
  return {q + 1, "generic"};
}

BigInt gq_number(std::int64_t n, std::int64_t d) {
  require(n >= 1 && d >= 1, "gq_number needs n, d >= 1");
  const BigInt v = BigInt(d) * (n - d);
  return (v > 0 ? v : BigInt(0)) + 1;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::strict:
      return "strict";
    case Verdict::violated:
      return "violated";
  }
  return "violated";
}

bool lemma35_admissible(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t l) {
  return n + l - 2 * k >= 0 && n > k && k >= l && l >= d && d >= 2 && m >= 2 &&
         BigInt(k) * (n - k) >= m * binomial(k, d);
}

IntersectionReport lemma35_check(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t l) {
  require(lemma35_admissible(m, n, k, d, l), "hypotheses not satisfied");
  IntersectionReport r;
  r.lhs = BigInt(l) * (n + l - 2 * k);
  r.rhs = m * binomial(l, d);
  r.strict_hypothesis = BigInt(k) * (n - k) > m * binomial(k, d);
  if (r.lhs < r.rhs || (r.strict_hypothesis && r.lhs == r.rhs))
    r.verdict = Verdict::violated;
  else if (r.lhs > r.rhs)
    r.verdict = Verdict::strict;
  else
    r.verdict = Verdict::holds;
  return r;
}

bool thm13_predicate(std::int64_t n, std::int64_t d, std::int64_t m) {
  require(n >= 1 && d >= 1, "thm13_predicate needs n, d >= 1");
  return BigInt(d) * (n - 2) >= m * big_pow(2, static_cast<std::uint64_t>(d - 1));
}

CpzExponent cpz_exponent(std::int64_t n, std::int64_t d, std::int64_t m) {
  require(n >= 1 && d >= 1 && m >= 0, "cpz_exponent needs n, d >= 1 and m >= 0");
  CpzExponent out;
  out.exponent = BigRational(d) - BigRational(m, n);
  out.admissible = BigInt(d) * (n - 1) > (big_pow(2, static_cast<std::uint64_t>(d)) - 1) * m;
  return out;
}

}  // namespace isokit::formulas
