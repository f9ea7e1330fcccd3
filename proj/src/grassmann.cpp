#include "isokit/grassmann.hpp"

#include <atomic>
#include <string>

#include "isokit/parallel.hpp"
#include "isokit/tensor.hpp"

namespace isokit {

BigInt gauss_binom(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= big_pow(q, n - i) - 1;
    den *= big_pow(q, k - i) - 1;
  }
  return num / den;
}

void for_each_subspace(const Field& f, std::size_t n, std::size_t k, std::uint64_t cap,
                       const std::function<void(const Subspace&)>& visit) {
  if (k > n) throw PreconditionError("subspace dimension exceeds ambient dimension");
  const BigInt total = gauss_binom(n, k, f.order());
  if (total > cap)
    throw CapExceeded("Gr(" + std::to_string(k) + ", " + std::to_string(n) + ") over GF(" +
                      std::to_string(f.order()) + ") has " + total.str() + " points, above the cap " +
                      std::to_string(cap));
  const std::uint32_t q = f.order();
  for (const auto& pivots : increasing_tuples(n, k)) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    // Free positions, row-major.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    Matrix m(k, n);
    for (std::size_t r = 0; r < k; ++r) m.at(r, pivots[r]) = 1;
    std::vector<Elem> digits(free.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < free.size(); ++i) m.at(free[i].first, free[i].second) = digits[i];
      visit(Subspace::from_rref(n, m));
      // Odometer; the last free entry varies fastest.
      std::size_t i = free.size();
      while (i > 0) {
        if (++digits[i - 1] < q) break;
        digits[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
}

std::vector<Subspace> enumerate_grassmannian(const Field& f, std::size_t n, std::size_t k, std::uint64_t cap) {
  std::vector<Subspace> out;
  for_each_subspace(f, n, k, cap, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

std::vector<BigInt> sigma_counts(const Field& f, std::size_t n, std::size_t k, SigmaMethod method,
                                 std::uint64_t cap, unsigned threads) {
  if (k > n) throw PreconditionError("subspace dimension exceeds ambient dimension");
  const BigInt gr = gauss_binom(n, k, f.order());
  if (method == SigmaMethod::automatic) method = gr * gr <= cap ? SigmaMethod::pairs : SigmaMethod::orbit;
  std::vector<BigInt> out(k + 1, 0);
  const auto all = enumerate_grassmannian(f, n, k, cap);
  if (method == SigmaMethod::pairs) {
    if (gr * gr > cap)
      throw CapExceeded("pair enumeration of Gr(" + std::to_string(k) + ", " + std::to_string(n) +
                        ")^2 exceeds the cap " + std::to_string(cap));
    std::vector<std::vector<std::uint64_t>> partial(std::max(1U, threads), std::vector<std::uint64_t>(k + 1, 0));
    parallel_blocks(all.size(), threads, [&](std::size_t b, std::size_t e, unsigned w) {
      for (std::size_t i = b; i < e; ++i)
        for (const auto& v : all) ++partial[w][intersection_dim(f, all[i], v)];
    });
    for (const auto& p : partial)
      for (std::size_t l = 0; l <= k; ++l) out[l] += p[l];
    return out;
  }
  const Subspace u0 = [&] {
    Matrix m(k, n);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return Subspace::from_rref(n, std::move(m));
  }();
  std::vector<std::uint64_t> fixed(k + 1, 0);
  for (const auto& v : all) ++fixed[intersection_dim(f, u0, v)];
  for (std::size_t l = 0; l <= k; ++l) out[l] = gr * fixed[l];
  return out;
}

BigInt sigma_count(const Field& f, std::size_t n, std::size_t k, std::size_t l, SigmaMethod method,
                   std::uint64_t cap, unsigned threads) {
  const std::size_t lo = 2 * k > n ? 2 * k - n : 0;
  if (k > n || l < lo || l > k)
    throw PreconditionError("intersection dimension " + std::to_string(l) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(k) + "]");
  return sigma_counts(f, n, k, method, cap, threads)[l];
}

std::int64_t sigma_dimension(std::int64_t n, std::int64_t k, std::int64_t l) {
  return 2 * k * (n - k + l) - l * (n + l);
}

std::int64_t dim_I1(std::int64_t n, std::int64_t d, std::int64_t m, std::int64_t k) {
  return (n - k) * k + m * static_cast<std::int64_t>(binomial(n, d)) - m * static_cast<std::int64_t>(binomial(k, d)) - 1;
}

std::int64_t dim_J1(std::int64_t n, std::int64_t d, std::int64_t m) {
  return 2 * d * (n - 2) + m * (static_cast<std::int64_t>(pow_saturating(n, d)) - (std::int64_t{1} << d)) - 1;
}

std::vector<BigRational> interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw PreconditionError("interpolation needs matching, nonempty points");
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<BigRational> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      if (xs[i] == xs[i - j]) throw PreconditionError("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / BigRational(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Expand the Newton form into monomials (Horner from the top).
  std::vector<BigRational> poly{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<BigRational> next(poly.size() + 1, BigRational(0));
    for (std::size_t c = 0; c < poly.size(); ++c) {
      next[c + 1] += poly[c];
      next[c] -= poly[c] * BigRational(xs[i]);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return poly;
}

int polynomial_degree(const std::vector<BigRational>& coeffs) {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) return static_cast<int>(i);
  return -1;
}

BigRational evaluate(const std::vector<BigRational>& coeffs, const BigInt& x) {
  BigRational acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * BigRational(x) + coeffs[i];
  return acc;
}

std::vector<std::uint64_t> prime_powers(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; out.size() < count; ++q) {
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint64_t r = q;
    while (r % p == 0) r /= p;
    if (r == 1) out.push_back(q);
  }
  return out;
}

DegreeCheck degree_in_q(std::size_t degree_bound, const std::function<BigInt(const Field&)>& count) {
  DegreeCheck out;
  out.qs = prime_powers(degree_bound + 2);
  std::vector<BigInt> xs;
  for (auto q : out.qs) {
    out.counts.push_back(count(Field::of_order(q)));
    xs.emplace_back(q);
  }
  const std::vector<BigInt> fit_x(xs.begin(), xs.end() - 1);
  const std::vector<BigInt> fit_y(out.counts.begin(), out.counts.end() - 1);
  out.polynomial = interpolate(fit_x, fit_y);
  out.degree = polynomial_degree(out.polynomial);
  out.confirmed = evaluate(out.polynomial, xs.back()) == BigRational(out.counts.back());
  return out;
}

}  // namespace isokit
