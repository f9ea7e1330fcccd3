#include "doctest.h"

#include "isokit/rank.hpp"
#include "isokit/rng.hpp"
#include "oracles.hpp"

using namespace isokit;

TEST_CASE("zero count examples") {
  const auto f2 = Field::make(2, 1);
  CHECK(zero_count(Tensor(f2, 2, 3, 1)) == 64);
  CHECK(zero_count(Tensor(f2, 2, 2, 1, Vec{1, 0, 0, 1})) == 10);
  CHECK(zero_count(Tensor(f2, 1, 2, 1, Vec{1})) == 3);
  CHECK(zero_count_raw(Tensor(f2, 2, 2, 1, Vec{1, 0, 0, 1})) == 10);
}

TEST_CASE("kernel counting equals brute force in every slot") {
  SplitMix64 rng(17);
  for (std::uint64_t q : {2ULL, 3ULL, 4ULL})
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::size_t m = 1; m <= 2; ++m) {
        const std::size_t n = q == 4 ? 2 : 3 - (d == 3 ? 1 : 0);
        const auto t = random_tensor(Field::of_order(q), n, d, m, rng.next());
        const BigInt want(oracle::zero_count(t));
        CHECK(zero_count_raw(t) == want);
        for (std::size_t slot = 0; slot < d; ++slot) CHECK(zero_count(t, slot) == want);
        CHECK(zero_count(t, 0, default_cap(), 4) == want);
      }
}

TEST_CASE("analytic rank bounds") {
  const auto f2 = Field::make(2, 1);
  const auto zero = analytic_rank(Tensor(f2, 3, 2, 2));
  CHECK(zero.ar_decimal == 0.0);
  CHECK(zero.ar_geq_0);
  CHECK(zero.ar_leq_m);

  const auto id = analytic_rank(Tensor(f2, 2, 2, 1, Vec{1, 0, 0, 1}));
  CHECK(id.zero_count == 10);
  CHECK(id.dn1 == 4);
  CHECK(id.ar_decimal == doctest::Approx(4.0 - std::log2(10.0)));
  CHECK(id.ar_leq_m);

  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t q = 2 + rng.below(2);
    const std::size_t d = 2 + rng.below(2), n = 1 + rng.below(3), m = 1 + rng.below(2);
    const auto t = random_tensor(Field::of_order(q), n, d, m, rng.next());
    const auto r = analytic_rank(t);
    CHECK(r.ar_leq_m);
    CHECK(r.ar_geq_0);
    CHECK(r.zero_count * big_pow(q, m) >= big_pow(q, d * n));
    CHECK((r.ar_decimal == 0.0) == t.is_zero());
  }
  CHECK(partition_rank_bound(Tensor(f2, 2, 2, 3)) == 3);
  CHECK(partition_rank_bound(Tensor(f2, 2, 2, 1)) == 1);
}

TEST_CASE("zero count respects the cap") {
  CHECK_THROWS_AS(zero_count_raw(Tensor(Field::make(2, 1), 4, 3, 1), 100), CapExceeded);
}
