#pragma once

// Brute-force reference implementations used only by the tests. They avoid
// the library's tables, RREF code and pruning so agreement is meaningful.

#include <cstdint>
#include <set>
#include <vector>

#include "isokit/field.hpp"
#include "isokit/tensor.hpp"

namespace oracle {

using isokit::Elem;
using isokit::Vec;

// GF(p^e) by schoolbook polynomial arithmetic modulo the given modulus.
struct PolyField {
  std::uint32_t p;
  std::vector<std::uint32_t> modulus;  // monic, low to high

  std::size_t e() const { return modulus.size() - 1; }

  std::vector<std::uint32_t> unpack(Elem a) const {
    std::vector<std::uint32_t> c(e());
    for (auto& x : c) {
      x = a % p;
      a /= p;
    }
    return c;
  }

  Elem pack(const std::vector<std::uint32_t>& c) const {
    Elem a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
    return a;
  }

  Elem add(Elem a, Elem b) const {
    auto x = unpack(a), y = unpack(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }

  Elem mul(Elem a, Elem b) const {
    const auto x = unpack(a), y = unpack(b);
    std::vector<std::uint64_t> prod(2 * e(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    // Reduce from the top using x^e = -(lower terms of the modulus).
    for (std::size_t deg = prod.size(); deg-- > e();) {
      const std::uint64_t c = prod[deg];
      if (c == 0) continue;
      prod[deg] = 0;
      for (std::size_t i = 0; i < e(); ++i)
        prod[deg - e() + i] = (prod[deg - e() + i] + (p - modulus[i]) % p * c) % p;
    }
    std::vector<std::uint32_t> out(e());
    for (std::size_t i = 0; i < e(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }

  std::uint32_t order() const {
    std::uint32_t q = 1;
    for (std::size_t i = 0; i < e(); ++i) q *= p;
    return q;
  }
};

// True iff the monic polynomial is not a product of two monic factors of
// positive degree, by listing every such product.
inline bool irreducible_by_products(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  auto monic = [&](std::size_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> c(k + 1, 0);
    c[k] = 1;
    for (;;) {
      out.push_back(c);
      std::size_t i = 0;
      while (i < k && ++c[i] == p) c[i++] = 0;
      if (i == k) break;
    }
    return out;
  };
  for (std::size_t a = 1; a < deg; ++a)
    for (const auto& f : monic(a))
      for (const auto& g : monic(deg - a)) {
        std::vector<std::uint32_t> h(deg + 1, 0);
        for (std::size_t i = 0; i <= a; ++i)
          for (std::size_t j = 0; j <= deg - a; ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
        if (h == poly) return false;
      }
  return true;
}

inline std::uint64_t vec_code(const Vec& v, std::uint32_t q) {
  std::uint64_t c = 0;
  for (Elem x : v) c = c * q + x;
  return c;
}

inline Vec vec_from_code(std::uint64_t c, std::uint32_t q, std::size_t n) {
  Vec v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<Elem>(c % q);
    c /= q;
  }
  return v;
}

// Every vector of span(gens), as codes, by closing under all combinations.
inline std::set<std::uint64_t> span_set(const isokit::Field& f, std::size_t n, const std::vector<Vec>& gens) {
  const std::uint32_t q = f.order();
  std::set<std::uint64_t> out;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) combos *= q;
  for (std::uint64_t c = 0; c < combos; ++c) {
    Vec v(n, 0);
    std::uint64_t x = c;
    for (const auto& g : gens) {
      const Elem a = static_cast<Elem>(x % q);
      x /= q;
      for (std::size_t i = 0; i < n; ++i) v[i] = f.add(v[i], f.mul(a, g[i]));
    }
    out.insert(vec_code(v, q));
  }
  return out;
}

// Number of k-dimensional subspaces as distinct span sets of k-tuples.
inline std::size_t count_subspaces(const isokit::Field& f, std::size_t n, std::size_t k) {
  const std::uint32_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::uint64_t size_k = 1;
  for (std::size_t i = 0; i < k; ++i) size_k *= q;
  std::set<std::set<std::uint64_t>> seen;
  std::vector<std::uint64_t> idx(k, 0);
  for (;;) {
    std::vector<Vec> gens;
    for (auto c : idx) gens.push_back(vec_from_code(c, q, n));
    auto s = span_set(f, n, gens);
    if (s.size() == size_k) seen.insert(std::move(s));
    std::size_t i = 0;
    while (i < k && ++idx[i] == total) idx[i++] = 0;
    if (i == k) break;
  }
  return seen.size();
}

// sum over all index tuples of coeff * v_1[i_1] ... v_d[i_d].
inline Vec naive_eval(const isokit::Tensor& t, const std::vector<Vec>& args) {
  const auto& f = t.field();
  Vec out(t.m(), 0);
  std::vector<std::size_t> idx(t.d(), 0);
  for (std::size_t o = 0; o < t.m(); ++o) {
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      Elem term = t.at(o, idx);
      for (std::size_t s = 0; s < t.d(); ++s) term = f.mul(term, args[s][idx[s]]);
      out[o] = f.add(out[o], term);
      std::size_t s = t.d();
      while (s > 0 && ++idx[s - 1] == t.n()) idx[--s] = 0;
      if (s == 0) break;
    }
  }
  return out;
}

inline bool all_zero(const Vec& v) {
  for (Elem x : v)
    if (x != 0) return false;
  return true;
}

// T vanishes on every tuple drawn from the given vector sets.
inline bool vanishes_on_sets(const isokit::Tensor& t, const std::vector<std::vector<Vec>>& sets) {
  std::vector<std::size_t> idx(sets.size(), 0);
  for (const auto& s : sets)
    if (s.empty()) return true;
  for (;;) {
    std::vector<Vec> args;
    for (std::size_t s = 0; s < sets.size(); ++s) args.push_back(sets[s][idx[s]]);
    if (!all_zero(naive_eval(t, args))) return false;
    std::size_t s = sets.size();
    while (s > 0 && ++idx[s - 1] == sets[s - 1].size()) idx[--s] = 0;
    if (s == 0) return true;
  }
}

inline std::vector<Vec> span_vectors(const isokit::Field& f, std::size_t n, const std::vector<Vec>& gens) {
  std::vector<Vec> out;
  for (auto c : span_set(f, n, gens)) out.push_back(vec_from_code(c, f.order(), n));
  return out;
}

// |Z_T| by evaluating T on every argument tuple.
inline std::uint64_t zero_count(const isokit::Tensor& t) {
  const std::uint32_t q = t.field().order();
  std::uint64_t per = 1;
  for (std::size_t i = 0; i < t.n(); ++i) per *= q;
  std::vector<std::uint64_t> idx(t.d(), 0);
  std::uint64_t count = 0;
  for (;;) {
    std::vector<Vec> args;
    for (auto c : idx) args.push_back(vec_from_code(c, q, t.n()));
    if (all_zero(naive_eval(t, args))) ++count;
    std::size_t s = t.d();
    while (s > 0 && ++idx[s - 1] == per) idx[--s] = 0;
    if (s == 0) return count;
  }
}

}  // namespace oracle
