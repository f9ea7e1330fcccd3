#include "doctest.h"

#include "isokit/boxfree.hpp"
#include "isokit/rng.hpp"
#include "oracles.hpp"

using namespace isokit;

namespace {

std::uint64_t edge_count_by_eval(const Tensor& t) {
  const auto pts = projective_points(t.field(), t.n());
  std::uint64_t count = 0;
  for (const auto& a : pts)
    for (const auto& b : pts) {
      const std::vector<Vec> args{a, b};
      count += oracle::all_zero(oracle::naive_eval(t, args)) ? 1 : 0;
    }
  return count;
}

// A K_{2,2} in a bipartite graph: two left and two right vertices with all four edges.
bool has_k22(const Hypergraph& h) {
  const std::size_t left = h.parts[0].size();
  std::vector<std::set<std::uint32_t>> nbr(left);
  for (const auto& e : h.edges) nbr[e[0]].insert(e[1]);
  for (std::size_t a = 0; a < left; ++a)
    for (std::size_t b = a + 1; b < left; ++b) {
      std::size_t common = 0;
      for (auto v : nbr[a]) common += nbr[b].count(v);
      if (common >= 2) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("projective points") {
  const auto f3 = Field::make(3, 1);
  const auto pts = projective_points(f3, 3);
  CHECK(pts.size() == 13);
  std::set<Vec> seen(pts.begin(), pts.end());
  CHECK(seen.size() == 13);
  for (const auto& v : pts) {
    const auto first = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    REQUIRE(first != v.end());
    CHECK(*first == 1);
  }
  CHECK(projective_points(Field::of_order(4), 2).size() == 5);
}

TEST_CASE("build_G examples") {
  const auto f2 = Field::make(2, 1);
  const auto zero = build_G(Tensor(f2, 2, 2, 1));
  CHECK(zero.parts.size() == 2);
  CHECK(zero.parts[0].size() == 3);
  CHECK(zero.edges.size() == 9);
  const auto id = build_G(Tensor(f2, 2, 2, 1, Vec{1, 0, 0, 1}));
  CHECK(id.edges.size() == 3);
  CHECK(std::is_sorted(id.edges.begin(), id.edges.end()));
  for (const auto& e : id.edges) CHECK(id.has_edge(e));
}

TEST_CASE("build_G agrees with evaluation on projective points") {
  SplitMix64 rng(12);
  for (std::uint64_t q : {2ULL, 3ULL}) {
    const auto t = random_tensor(Field::of_order(q), 3, 2, 1, rng.next());
    const auto g = build_G(t);
    CHECK(g.edges.size() == edge_count_by_eval(t));
    for (const auto& e : g.edges) {
      const std::vector<Vec> args{g.parts[0][e[0]], g.parts[1][e[1]]};
      CHECK(oracle::all_zero(eval(t, args)));
    }
  }
}

TEST_CASE("edge count lower bound") {
  const auto f2 = Field::make(2, 1);
  const Tensor t(f2, 2, 2, 3);
  const auto b = edge_bound_check(t, build_G(t));
  CHECK(b.numerator < 0);
  CHECK(b.holds);

  SplitMix64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const std::uint64_t q = 2 + rng.below(2);
    const auto r = random_tensor(Field::of_order(q), 3, 2, 1 + rng.below(2), rng.next());
    const auto e = edge_bound_check(r, build_G(r));
    CHECK(e.holds);
    CHECK(e.edges * e.denominator >= e.numerator);
  }
}

TEST_CASE("pigeonhole bound and admissibility") {
  CHECK(dt_pigeonhole_bound(2, 4, 2, 1) == 76);
  CHECK(box_admissible(3, 2, 1));
  CHECK_FALSE(box_admissible(2, 2, 1));
  CHECK_THROWS_AS(pigeonhole_search_T(Field::make(2, 1), 2, 2, 1, 0), PreconditionError);
}

TEST_CASE("freeness check") {
  Hypergraph empty;
  empty.d = 2;
  empty.parts = {{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
  CHECK(freeness_check(empty).free);

  auto complete = empty;
  complete.edges = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const auto r = freeness_check(complete);
  CHECK_FALSE(r.free);
  CHECK(r.violation.has_value());

  auto path = empty;
  path.edges = {{0, 0}, {0, 1}, {1, 1}};
  CHECK(freeness_check(path).free);

  SplitMix64 rng(77);
  const auto f3 = Field::make(3, 1);
  for (int i = 0; i < 10; ++i) {
    const auto g = build_G(random_tensor(f3, 3, 2, 1, rng.next()));
    CHECK(freeness_check(g).free == !has_k22(g));
  }
}

TEST_CASE("delete and verify on the zero tensor") {
  const auto p = delete_and_verify(Tensor(Field::make(2, 1), 2, 2, 1));
  CHECK(p.after.edges.empty());
  CHECK(p.certificate.freeness_verified);
  CHECK(p.certificate.dt_size == 1);
  CHECK(p.certificate.edge_count_before == 9);
}

TEST_CASE("box pipeline at q = 2, d = 2, n = 3, m = 1") {
  const auto f2 = Field::make(2, 1);
  const auto search = pigeonhole_search_T(f2, 3, 2, 1, 0);
  CHECK(search.exhaustive);
  CHECK(search.met_bound);
  CHECK(search.bound == 76);
  CHECK(search.dt_size <= 76);
  CHECK(search.trials == 4681);
  CHECK(search.dt_size == 35);
  CHECK(search.tensor == pigeonhole_search_T(f2, 3, 2, 1, 0).tensor);

  const auto p = delete_and_verify(search.tensor);
  const auto& c = p.certificate;
  CHECK(c.edge_count_before == 105);
  CHECK(c.edge_count_after == 0);
  CHECK(c.edge_bound.holds);
  CHECK(c.edge_bound.numerator == 96);
  CHECK(c.freeness_verified);
  CHECK(c.key_step_verified);
  CHECK(c.k22_copies == 315);
  CHECK(BigInt(c.deleted_count) <= c.deletion_budget);
  CHECK(c.edge_count_after + c.deleted_count == c.edge_count_before);
  CHECK_FALSE(has_k22(p.after));

  const auto seeded = pigeonhole_search_T(f2, 3, 2, 1, 42);
  CHECK(seeded.met_bound);
  CHECK(delete_and_verify(seeded.tensor).certificate.freeness_verified);
}
