#include "doctest.h"

#include "isokit/rng.hpp"
#include "isokit/tensor.hpp"
#include "oracles.hpp"

using namespace isokit;

namespace {

Vec random_vec(const Field& f, std::size_t n, SplitMix64& rng) {
  Vec v(n);
  for (auto& x : v) x = static_cast<Elem>(rng.below(f.order()));
  return v;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("eval examples") {
  const auto f2 = Field::make(2, 1);
  const Tensor zero(f2, 3, 2, 2);
  const std::vector<Vec> args{{1, 1, 0}, {0, 1, 1}};
  CHECK(eval(zero, args) == Vec{0, 0});

  const Tensor id(f2, 2, 2, 1, Vec{1, 0, 0, 1});
  const std::vector<Vec> e11{unit(2, 0), unit(2, 0)};
  CHECK(eval(id, e11) == Vec{1});
}

TEST_CASE("eval agrees with the naive sum on random tensors") {
  SplitMix64 rng(7);
  for (std::uint64_t q : {2ULL, 3ULL, 4ULL}) {
    const auto f = Field::of_order(q);
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto t = random_tensor(f, 3, d, 2, rng.next());
      std::vector<Vec> args;
      for (std::size_t s = 0; s < d; ++s) args.push_back(random_vec(f, 3, rng));
      CHECK(eval(t, args) == oracle::naive_eval(t, args));
    }
  }
}

TEST_CASE("alt_eval alternates") {
  const auto f3 = Field::make(3, 1);
  AltTensor t(f3, 2, 2, 1);
  t.set(0, 0, 1);
  const std::vector<Vec> a{unit(2, 0), unit(2, 1)};
  const std::vector<Vec> b{unit(2, 1), unit(2, 0)};
  CHECK(alt_eval(t, a) == Vec{1});
  CHECK(alt_eval(t, b) == Vec{2});

  SplitMix64 rng(11);
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL}) {
    const auto f = Field::of_order(q);
    const auto u = random_alt_tensor(f, 4, 3, 2, rng.next());
    const auto v = random_vec(f, 4, rng);
    const auto w = random_vec(f, 4, rng);
    const std::vector<Vec> rep{v, v, w};
    CHECK(oracle::all_zero(alt_eval(u, rep)));
    const std::vector<Vec> rep2{w, v, v};
    CHECK(oracle::all_zero(alt_eval(u, rep2)));
  }
}

TEST_CASE("expand produces the antisymmetric matrix") {
  const auto f3 = Field::make(3, 1);
  AltTensor t(f3, 2, 2, 1);
  t.set(0, 0, 1);
  CHECK(expand(t).coeffs() == Vec{0, 1, 2, 0});
  CHECK(expand(AltTensor(f3, 3, 2, 2)).is_zero());
}

TEST_CASE("expand carries permutation signs") {
  const auto f3 = Field::make(3, 1);
  const auto t = random_alt_tensor(f3, 4, 3, 1, 99);
  const auto full = expand(t);
  const auto tuples = increasing_tuples(4, 3);
  std::vector<std::size_t> perm{0, 1, 2};
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    do {
      std::vector<std::size_t> idx{tuples[i][perm[0]], tuples[i][perm[1]], tuples[i][perm[2]]};
      const Elem c = t.at(0, i);
      const Elem want = permutation_sign(perm) > 0 ? c : f3.neg(c);
      CHECK(full.at(0, idx) == want);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // Entries with a repeated index vanish.
  const std::vector<std::size_t> rep{1, 1, 3};
  CHECK(full.at(0, rep) == 0);
}

TEST_CASE("expand agrees with alt_eval") {
  SplitMix64 rng(3);
  for (std::uint64_t q : {2ULL, 3ULL, 4ULL}) {
    const auto f = Field::of_order(q);
    const auto t = random_alt_tensor(f, 4, 2, 2, rng.next());
    std::vector<Vec> args{random_vec(f, 4, rng), random_vec(f, 4, rng)};
    CHECK(alt_eval(t, args) == eval(expand(t), args));
  }
}

TEST_CASE("restrict_zero examples") {
  const auto f2 = Field::make(2, 1);
  const Tensor id(f2, 2, 2, 1, Vec{1, 0, 0, 1});
  const std::vector<Subspace> zeros{Subspace::zero(2), Subspace::zero(2)};
  CHECK(restrict_zero(id, zeros));
  const std::vector<Vec> e1{unit(2, 0)};
  const auto line = Subspace::span(f2, 2, e1);
  const std::vector<Subspace> lines{line, line};
  CHECK_FALSE(restrict_zero(id, lines));

  const auto f3 = Field::make(3, 1);
  AltTensor w(f3, 2, 2, 1);
  w.set(0, 0, 1);
  const auto l3 = Subspace::span(f3, 2, e1);
  const std::vector<Subspace> ll{l3, l3};
  CHECK(restrict_zero(expand(w), ll));
  CHECK(restrict_zero(w, l3));
}

TEST_CASE("restrict_zero agrees with evaluation on spans") {
  SplitMix64 rng(5);
  const auto f = Field::of_order(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto t = random_tensor(f, 3, 2, 1, rng.next());
    std::vector<Subspace> spaces;
    std::vector<std::vector<Vec>> sets;
    for (int s = 0; s < 2; ++s) {
      std::vector<Vec> gens{random_vec(f, 3, rng)};
      if (rng.below(2) == 1) gens.push_back(random_vec(f, 3, rng));
      spaces.push_back(Subspace::span(f, 3, gens));
      sets.push_back(oracle::span_vectors(f, 3, gens));
    }
    const bool want = oracle::vanishes_on_sets(t, sets);
    CHECK(restrict_zero(t, spaces) == want);
  }
}

TEST_CASE("base change") {
  const auto f2 = Field::make(2, 1);
  const auto f4 = Field::make(2, 2);
  const auto t = random_tensor(f2, 3, 2, 2, 1);
  CHECK(base_change(t, f2) == t);
  const auto big = base_change(t, f4);
  CHECK(big.field() == f4);
  CHECK(big.coeffs() == t.coeffs());  // F2 sits inside F4 as {0, 1}
  CHECK(base_change(Tensor(f2, 2, 2, 1), f4).is_zero());

  const auto f3 = Field::make(3, 1);
  const auto f9 = Field::make(3, 2);
  const auto a = random_alt_tensor(f3, 4, 2, 1, 4);
  const auto a9 = base_change(a, f9);
  const Embedding emb(f3, f9);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) CHECK(a9.coeffs()[i] == emb(a.coeffs()[i]));
  CHECK_THROWS_AS(base_change(t, f3), PreconditionError);
}

TEST_CASE("random tensors are reproducible") {
  const auto f2 = Field::make(2, 1);
  const auto t = random_tensor(f2, 2, 2, 1, 42);
  CHECK(t == random_tensor(f2, 2, 2, 1, 42));
  CHECK(t.coeffs() == Vec{1, 1, 0, 0});
  CHECK_FALSE(random_tensor(f2, 4, 2, 2, 1) == random_tensor(f2, 4, 2, 2, 2));
  const auto alt = random_alt_tensor(f2, 2, 3, 2, 9);
  CHECK(alt.is_zero());
  CHECK(alt.tuple_count() == 0);
}

TEST_CASE("permutation signs") {
  const std::vector<std::size_t> id{0, 1, 2}, swap{1, 0, 2}, cyc{1, 2, 0};
  CHECK(permutation_sign(id) == 1);
  CHECK(permutation_sign(swap) == -1);
  CHECK(permutation_sign(cyc) == 1);
}

TEST_CASE("increasing tuples") {
  CHECK(increasing_tuples(4, 2).size() == 6);
  CHECK(increasing_tuples(2, 3).empty());
  CHECK(increasing_tuples(3, 0).size() == 1);
}
