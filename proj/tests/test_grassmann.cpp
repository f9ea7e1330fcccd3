#include "doctest.h"

#include <set>

#include "isokit/grassmann.hpp"
#include "oracles.hpp"

using namespace isokit;

TEST_CASE("Grassmannian sizes") {
  const auto f2 = Field::make(2, 1);
  CHECK(enumerate_grassmannian(f2, 2, 1).size() == 3);
  CHECK(enumerate_grassmannian(f2, 4, 2).size() == 35);
  CHECK(enumerate_grassmannian(Field::of_order(5), 3, 0).size() == 1);
  CHECK(gauss_binom(4, 2, 2) == 35);
  CHECK(gauss_binom(3, 2, 7) == 57);
  CHECK(gauss_binom(6, 0, 9) == 1);
  CHECK(gauss_binom(2, 3, 2) == 0);
  CHECK_THROWS_AS(enumerate_grassmannian(f2, 2, 3), PreconditionError);
}

TEST_CASE("enumeration matches distinct span sets") {
  for (std::uint64_t q : {2ULL, 3ULL, 4ULL}) {
    const auto f = Field::of_order(q);
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        const auto all = enumerate_grassmannian(f, n, k);
        CHECK(all.size() == oracle::count_subspaces(f, n, k));
        CHECK(BigInt(all.size()) == gauss_binom(n, k, q));
        std::set<std::set<std::uint64_t>> sets;
        for (const auto& s : all) {
          CHECK(s.dim() == k);
          std::vector<Vec> rows;
          for (std::size_t i = 0; i < s.dim(); ++i) rows.emplace_back(s.row(i).begin(), s.row(i).end());
          sets.insert(oracle::span_set(f, n, rows));
        }
        CHECK(sets.size() == all.size());
        CHECK(all == enumerate_grassmannian(f, n, k));
      }
  }
}

TEST_CASE("gauss_binom symmetry and Pascal rule") {
  for (std::uint64_t q : {2ULL, 3ULL, 7ULL})
    for (std::uint64_t n = 1; n <= 8; ++n)
      for (std::uint64_t k = 1; k <= n; ++k) {
        CHECK(gauss_binom(n, k, q) == gauss_binom(n, n - k, q));
        CHECK(gauss_binom(n, k, q) == gauss_binom(n - 1, k - 1, q) + big_pow(q, k) * gauss_binom(n - 1, k, q));
      }
}

TEST_CASE("intersection dimension") {
  const auto f3 = Field::make(3, 1);
  const std::vector<Vec> a{{1, 0, 0}, {0, 1, 0}}, b{{0, 1, 0}, {0, 0, 1}};
  const auto u = Subspace::span(f3, 3, a), v = Subspace::span(f3, 3, b);
  CHECK(intersection_dim(f3, u, v) == 1);
  CHECK(intersection_dim(f3, u, u) == 2);
  const auto f2 = Field::make(2, 1);
  const std::vector<Vec> x{{1, 0}}, y{{1, 1}};
  CHECK(intersection_dim(f2, Subspace::span(f2, 2, x), Subspace::span(f2, 2, y)) == 0);
  CHECK(sum(f3, u, v) == Subspace::full(3));
}

TEST_CASE("intersection dimension agrees with span-set intersection") {
  const auto f = Field::make(2, 1);
  const auto planes = enumerate_grassmannian(f, 4, 2);
  auto rows = [](const Subspace& s) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < s.dim(); ++i) out.emplace_back(s.row(i).begin(), s.row(i).end());
    return out;
  };
  for (std::size_t i = 0; i < planes.size(); i += 3)
    for (std::size_t j = 0; j < planes.size(); j += 2) {
      const auto a = oracle::span_set(f, 4, rows(planes[i]));
      const auto b = oracle::span_set(f, 4, rows(planes[j]));
      std::size_t common = 0;
      for (auto c : a) common += b.count(c);
      std::size_t l = 0;
      while ((std::size_t{1} << l) < common) ++l;
      CHECK(intersection_dim(f, planes[i], planes[j]) == l);
    }
}

TEST_CASE("sigma counts partition Gr x Gr") {
  const auto f2 = Field::make(2, 1);
  CHECK(sigma_count(f2, 2, 1, 1) == 3);
  for (std::uint64_t q : {2ULL, 3ULL}) {
    const auto f = Field::of_order(q);
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        const auto pairs = sigma_counts(f, n, k, SigmaMethod::pairs);
        const auto orbit = sigma_counts(f, n, k, SigmaMethod::orbit);
        CHECK(pairs == orbit);
        const std::size_t lo = 2 * k > n ? 2 * k - n : 0;
        BigInt total = 0;
        for (std::size_t l = 0; l < pairs.size(); ++l) {
          total += pairs[l];
          if (l < lo) CHECK(pairs[l] == 0);
        }
        const auto g = gauss_binom(n, k, q);
        CHECK(total == g * g);
        CHECK(pairs[k] == g);
      }
  }
  CHECK_THROWS_AS(sigma_count(f2, 4, 3, 1), PreconditionError);
  CHECK_THROWS_AS(sigma_count(f2, 4, 2, 3), PreconditionError);
}

TEST_CASE("sigma count q-degree") {
  for (std::size_t l = 0; l <= 2; ++l) {
    const auto check = degree_in_q(8, [&](const Field& f) { return sigma_count(f, 4, 2, l, SigmaMethod::orbit); });
    CAPTURE(l);
    CHECK(check.confirmed);
    CHECK(check.degree == sigma_dimension(4, 2, static_cast<std::int64_t>(l)));
  }
}

TEST_CASE("interpolation recovers polynomials") {
  // 3q^3 - q + 5
  std::vector<BigInt> xs, ys;
  for (int x : {2, 3, 4, 5, 7}) {
    xs.emplace_back(x);
    ys.emplace_back(3 * x * x * x - x + 5);
  }
  const auto c = interpolate(xs, ys);
  CHECK(polynomial_degree(c) == 3);
  CHECK(evaluate(c, BigInt(11)) == BigRational(3 * 1331 - 11 + 5));
  CHECK(prime_powers(6) == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8});
}

TEST_CASE("closed-form dimensions") {
  CHECK(dim_I1(3, 2, 1, 1) == 2 + 3 - 0 - 1);
  CHECK(dim_J1(3, 2, 1) == 4 + 5 - 1);
  CHECK(sigma_dimension(4, 2, 2) == 4);
  CHECK(sigma_dimension(4, 2, 0) == 8);
}
