#include "isokit/rank.hpp"

#include <cmath>
#include <string>

#include "isokit/linalg.hpp"
#include "isokit/parallel.hpp"

namespace isokit {

namespace {

// Decodes flat into base-q digits, most significant first.
void decode(std::uint64_t flat, std::uint32_t q, Vec& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<Elem>(flat % q);
    flat /= q;
  }
}

double log_q(const BigInt& x, std::uint64_t q) {
  // log of a big integer via its leading bits.
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  const std::size_t shift = bits > 60 ? bits - 60 : 0;
  const double mant = static_cast<double>(static_cast<std::uint64_t>(x >> shift));
  return (std::log(mant) + static_cast<double>(shift) * std::log(2.0)) / std::log(static_cast<double>(q));
}

}  // namespace

BigInt zero_count_raw(const Tensor& t, std::uint64_t cap) {
  const std::uint32_t q = t.field().order();
  const std::uint64_t total = pow_saturating(q, t.n() * t.d());
  if (total > cap) throw CapExceeded("raw zero count over " + std::to_string(total) + " tuples exceeds the cap");
  std::vector<Vec> args(t.d(), Vec(t.n(), 0));
  Vec digits(t.n() * t.d());
  std::uint64_t count = 0;
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    decode(flat, q, digits);
    for (std::size_t s = 0; s < t.d(); ++s)
      for (std::size_t i = 0; i < t.n(); ++i) args[s][i] = digits[s * t.n() + i];
    if (is_zero(eval(t, args))) ++count;
  }
  return count;
}

BigInt zero_count(const Tensor& t, std::size_t slot, std::uint64_t cap, unsigned threads) {
  if (slot >= t.d()) throw PreconditionError("slot out of range");
  const std::uint32_t q = t.field().order();
  const std::size_t n = t.n();
  const std::size_t others = t.d() - 1;
  const std::uint64_t total = pow_saturating(q, n * others);
  if (total > cap) throw CapExceeded("zero count over " + std::to_string(total) + " outer tuples exceeds the cap");
  // Histogram of kernel dimensions, merged after the parallel pass.
  std::vector<std::vector<std::uint64_t>> hist(std::max(1U, threads), std::vector<std::uint64_t>(n + 1, 0));
  parallel_blocks(static_cast<std::size_t>(total), threads, [&](std::size_t b, std::size_t e, unsigned w) {
    Vec digits(n * others);
    for (std::size_t flat = b; flat < e; ++flat) {
      decode(flat, q, digits);
      Tensor cur = t;
      // Contract the fixed slots from the highest index down so slot
      // positions below stay valid; `slot` itself is skipped.
      std::size_t which = others;
      for (std::size_t s = t.d(); s-- > 0;) {
        if (s == slot) continue;
        --which;
        const std::span<const Elem> v(digits.data() + which * n, n);
        cur = contract(cur, s, v);
      }
      Matrix lin(t.m(), n);
      lin.data = cur.coeffs();
      ++hist[w][n - rank(t.field(), std::move(lin))];
    }
  });
  BigInt count = 0;
  for (const auto& h : hist)
    for (std::size_t k = 0; k <= n; ++k) count += BigInt(h[k]) * big_pow(q, k);
  return count;
}

RankReport analytic_rank(const Tensor& t, std::uint64_t cap, unsigned threads) {
  RankReport r;
  r.q = t.field().order();
  r.dn1 = t.d() * t.n();
  r.bound_m = t.m();
  r.zero_count = zero_count(t, 0, cap, threads);
  r.ar_geq_0 = r.zero_count <= big_pow(r.q, r.dn1);
  r.ar_leq_m = r.dn1 < r.bound_m || r.zero_count >= big_pow(r.q, r.dn1 - r.bound_m);
  r.ar_decimal = static_cast<double>(r.dn1) - log_q(r.zero_count, r.q);
  if (!r.ar_geq_0 || !r.ar_leq_m) throw InvariantViolation("analytic rank outside [0, m]");
  return r;
}

}  // namespace isokit
