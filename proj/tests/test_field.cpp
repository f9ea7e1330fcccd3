#include "doctest.h"

#include "isokit/field.hpp"
#include "oracles.hpp"

using namespace isokit;

TEST_CASE("prime fields use the modulus x") {
  const auto f = Field::make(2, 1);
  CHECK(f.order() == 2);
  CHECK(f.spec().modulus == std::vector<std::uint32_t>{0, 1});
  CHECK(f.elements() == std::vector<Elem>{0, 1});
}

TEST_CASE("default moduli are the first irreducible in lexicographic order") {
  CHECK(Field::make(2, 2).spec().modulus == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(3, 2).spec().modulus == std::vector<std::uint32_t>{1, 0, 1});
  for (auto [p, e] : {std::pair{2U, 3U}, {2U, 4U}, {3U, 3U}, {5U, 2U}, {7U, 2U}}) {
    const auto spec = Field::make(p, e).spec();
    CHECK(oracle::irreducible_by_products(spec.modulus, p));
    CHECK(is_irreducible(spec.modulus, p));
  }
}

TEST_CASE("irreducibility agrees with the product-set oracle on every small monic polynomial") {
  for (std::uint32_t p : {2U, 3U}) {
    for (std::size_t deg = 1; deg <= 4; ++deg) {
      std::vector<std::uint32_t> c(deg + 1, 0);
      c[deg] = 1;
      for (;;) {
        CHECK(is_irreducible(c, p) == oracle::irreducible_by_products(c, p));
        std::size_t i = 0;
        while (i < deg && ++c[i] == p) c[i++] = 0;
        if (i == deg) break;
      }
    }
  }
}

TEST_CASE("small field identities") {
  const auto f4 = Field::make(2, 2);
  CHECK(f4.mul(2, 2) == 3);  // x * x = x + 1
  CHECK(Field::make(5, 1).inv(2) == 3);

  const auto f9 = Field::make(3, 2);
  Elem prod = 1;
  for (Elem a : f9.elements())
    if (a != 0) prod = f9.mul(prod, a);
  CHECK(prod == f9.neg(1));
  CHECK(f4.elements().size() == 4);
}

TEST_CASE("arithmetic matches schoolbook polynomial arithmetic") {
  for (auto [p, e] : {std::pair{2U, 1U}, {2U, 3U}, {3U, 2U}, {5U, 1U}, {2U, 4U}, {7U, 2U}}) {
    const auto f = Field::make(p, e);
    const oracle::PolyField g{p, f.spec().modulus};
    CAPTURE(p);
    CAPTURE(e);
    for (Elem a : f.elements())
      for (Elem b : f.elements()) {
        REQUIRE(f.add(a, b) == g.add(a, b));
        REQUIRE(f.mul(a, b) == g.mul(a, b));
      }
  }
}

TEST_CASE("field axioms") {
  for (std::uint64_t q : {2ULL, 3ULL, 4ULL, 8ULL, 9ULL, 25ULL}) {
    const auto f = Field::of_order(q);
    CAPTURE(q);
    for (Elem a : f.elements()) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.pow(a, q) == a);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, q - 1) == 1);
      }
      for (Elem b : f.elements()) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        for (Elem c : {Elem{0}, Elem{1}, static_cast<Elem>(q - 1)})
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("element codes round trip through coefficients") {
  const auto f = Field::make(3, 3);
  for (Elem a : f.elements()) CHECK(f.from_coeffs(f.coeffs(a)) == a);
  CHECK(f.from_int(-1) == f.neg(1));
  CHECK(f.from_int(7) == 1);
}

TEST_CASE("invalid fields are rejected") {
  CHECK_THROWS_AS(Field::make(4, 1), PreconditionError);
  CHECK_THROWS_AS(Field::make(2, 0), PreconditionError);
  CHECK_THROWS_AS(Field::of_order(6), PreconditionError);
  CHECK_THROWS_AS(Field::of_order(1), PreconditionError);
  CHECK_THROWS_AS(Field::from_spec(FieldSpec{2, 2, {1, 0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Field::make(2, 2).inv(0), PreconditionError);
}

TEST_CASE("embeddings are injective ring homomorphisms") {
  for (auto [s, t] : {std::pair{2ULL, 4ULL}, {2ULL, 16ULL}, {4ULL, 16ULL}, {3ULL, 9ULL}, {2ULL, 8ULL}}) {
    const auto src = Field::of_order(s);
    const auto dst = Field::of_order(t);
    const Embedding emb(src, dst);
    CAPTURE(s);
    CAPTURE(t);
    CHECK(emb(0) == 0);
    CHECK(emb(1) == 1);
    std::set<Elem> image;
    for (Elem a : src.elements()) {
      image.insert(emb(a));
      CHECK(dst.pow(emb(a), s) == emb(a));
      for (Elem b : src.elements()) {
        CHECK(emb(src.add(a, b)) == dst.add(emb(a), emb(b)));
        CHECK(emb(src.mul(a, b)) == dst.mul(emb(a), emb(b)));
      }
    }
    CHECK(image.size() == s);
  }
  CHECK_THROWS_AS(Embedding(Field::of_order(4), Field::of_order(8)), PreconditionError);
  CHECK_THROWS_AS(Embedding(Field::of_order(3), Field::of_order(4)), PreconditionError);
}
