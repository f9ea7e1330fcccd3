#pragma once

/// Grassmannians Gr(k, GF(q)^n): canonical enumeration, exact counts, the
/// intersection strata Sigma_l, and point-count degree checks.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "isokit/common.hpp"
#include "isokit/field.hpp"
#include "isokit/subspace.hpp"

namespace isokit {

/// prod_{i<k} (q^{n-i} - 1) / (q^{k-i} - 1)
BigInt gauss_binom(std::uint64_t n, std::uint64_t k, std::uint64_t q);

/// Visits every k-subspace of GF(q)^n once, ordered by pivot-column set
/// (lexicographic) and then by the free entries read row-major, first free
/// entry most significant. Throws CapExceeded when gauss_binom exceeds cap.
void for_each_subspace(const Field& f, std::size_t n, std::size_t k, std::uint64_t cap,
                       const std::function<void(const Subspace&)>& visit);

std::vector<Subspace> enumerate_grassmannian(const Field& f, std::size_t n, std::size_t k,
                                             std::uint64_t cap = default_cap());

enum class SigmaMethod {
  /// Every ordered pair (U, V) is enumerated.
  pairs,
  /// U is fixed to span(e_1..e_k) and the count scaled by |Gr(k, n)|; equal
  /// to `pairs` because GL_n acts transitively on Gr(k, n).
  orbit,
  /// `pairs` when |Gr|^2 fits the cap, `orbit` otherwise.
  automatic,
};

/// |Sigma_l(GF(q))| for every l in [0, k]; entries outside the admissible
/// range max(0, 2k - n) <= l <= k are zero.
std::vector<BigInt> sigma_counts(const Field& f, std::size_t n, std::size_t k,
                                 SigmaMethod method = SigmaMethod::automatic, std::uint64_t cap = default_cap(),
                                 unsigned threads = 1);

/// |Sigma_l(GF(q))|; throws PreconditionError for inadmissible l.
BigInt sigma_count(const Field& f, std::size_t n, std::size_t k, std::size_t l,
                   SigmaMethod method = SigmaMethod::automatic, std::uint64_t cap = default_cap(),
                   unsigned threads = 1);

/// 2k(n - k + l) - l(n + l)
std::int64_t sigma_dimension(std::int64_t n, std::int64_t k, std::int64_t l);

/// (n - k)k + m C(n, d) - m C(k, d) - 1
std::int64_t dim_I1(std::int64_t n, std::int64_t d, std::int64_t m, std::int64_t k);

/// 2d(n - 2) + m(n^d - 2^d) - 1
std::int64_t dim_J1(std::int64_t n, std::int64_t d, std::int64_t m);

/// Monomial coefficients (constant first) of the unique polynomial of
/// degree < xs.size() through the points.
std::vector<BigRational> interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

/// Degree of a coefficient list; -1 for the zero polynomial.
int polynomial_degree(const std::vector<BigRational>& coeffs);

BigRational evaluate(const std::vector<BigRational>& coeffs, const BigInt& x);

/// The first `count` prime powers 2, 3, 4, 5, 7, 8, 9, 11, ...
std::vector<std::uint64_t> prime_powers(std::size_t count);

struct DegreeCheck {
  std::vector<std::uint64_t> qs;
  std::vector<BigInt> counts;
  std::vector<BigRational> polynomial;
  int degree = -1;
  /// Interpolant agrees with one extra point beyond the degree bound.
  bool confirmed = false;
};

/// Interpolates q -> count(q) through degree_bound + 1 prime powers and
/// confirms the interpolant on the next prime power.
DegreeCheck degree_in_q(std::size_t degree_bound, const std::function<BigInt(const Field&)>& count);

}  // namespace isokit
