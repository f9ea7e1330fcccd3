#include "isokit/isotropy.hpp"

#include <algorithm>
#include <string>

#include "isokit/grassmann.hpp"
#include "isokit/linalg.hpp"
#include "isokit/rng.hpp"

namespace isokit {

namespace {

// Linear map x -> T(x, b_1, ..., b_{d-1}) as an m x n matrix, T expanded.
Matrix slot0_map(const Tensor& expanded, std::span<const Vec> rest) {
  Tensor cur = expanded;
  for (std::size_t s = expanded.d(); s-- > 1;) cur = contract(cur, s, rest[s - 1]);
  Matrix out(expanded.m(), expanded.n());
  out.data = cur.coeffs();
  return out;
}

struct AltSearch {
  const Tensor& expanded;
  const Field& f;
  std::size_t n, d;
  std::uint64_t cap;
  std::uint64_t visits = 0;
  bool stopped = false;
  std::size_t best = 0;
  Subspace best_space;

  // rows: current basis in RREF order; min_pivot: leftmost pivot (n if none).
  void dfs(std::vector<Vec>& rows, std::size_t min_pivot) {
    if (stopped) return;
    if (++visits > cap) {
      stopped = true;
      return;
    }
    if (rows.size() > best) {
      best = rows.size();
      best_space = Subspace::span(f, n, rows);
    }
    if (rows.size() + min_pivot <= best) return;

    // Constraints on the new row: T(x, b_S) = 0 for all (d-1)-subsets S.
    Matrix constraints(0, n);
    if (d >= 1 && rows.size() >= d - 1) {
      for (const auto& subset : increasing_tuples(rows.size(), d - 1)) {
        std::vector<Vec> rest;
        rest.reserve(subset.size());
        for (auto r : subset) rest.push_back(rows[r]);
        const Matrix lin = slot0_map(expanded, rest);
        for (std::size_t i = 0; i < lin.rows; ++i)
          if (!is_zero(lin.row(i))) constraints.append_row(lin.row(i));
      }
    }
    std::vector<bool> is_pivot(n, false);
    for (const auto& r : rows) {
      std::size_t c = 0;
      while (r[c] == 0) ++c;
      is_pivot[c] = true;
    }
    const std::uint32_t q = f.order();
    // Larger leading columns leave room for deeper subtrees; try them first.
    for (std::size_t lead = min_pivot; lead-- > 0;) {
      if (rows.size() + 1 + lead <= best) break;
      std::vector<std::size_t> free;
      for (std::size_t c = lead + 1; c < n; ++c)
        if (!is_pivot[c]) free.push_back(c);
      Vec v(n, 0);
      v[lead] = 1;
      std::vector<Elem> digits(free.size(), 0);
      for (;;) {
        for (std::size_t i = 0; i < free.size(); ++i) v[free[i]] = digits[i];
        if (is_zero(apply(f, constraints, v))) {
          rows.insert(rows.begin(), v);
          dfs(rows, lead);
          rows.erase(rows.begin());
          if (stopped) return;
          if (rows.size() + 1 + lead <= best) break;
        }
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
};

std::uint64_t checked_power_count(std::uint64_t base, std::uint64_t exp, std::uint64_t cap, const char* what) {
  const std::uint64_t v = pow_saturating(base, exp);
  if (v > cap) throw CapExceeded(std::string(what) + " exceeds the cap " + std::to_string(cap));
  return v;
}

// Calls visit(prefix indices, constraint matrix) for every prefix of d-1
// planes; the constraint matrix rows are the maps x -> T(b_1..b_{d-1}, x).
template <typename Visit>
bool for_each_prefix(const Tensor& t, const std::vector<Subspace>& planes, Visit&& visit) {
  const std::size_t d = t.d();
  std::vector<std::size_t> idx(d - 1, 0);
  // Partially contracted tensors for each depth: contract slot 0 repeatedly.
  std::vector<std::vector<Tensor>> layers(d);
  layers[0] = {t};
  const auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == d - 1) {
      Matrix c(0, t.n());
      for (const auto& last : layers[depth])
        for (std::size_t o = 0; o < last.m(); ++o) {
          std::span<const Elem> row(last.coeffs().data() + o * t.n(), t.n());
          if (!is_zero(row)) c.append_row(row);
        }
      return visit(idx, c);
    }
    for (std::size_t p = 0; p < planes.size(); ++p) {
      idx[depth] = p;
      auto& next = layers[depth + 1];
      next.clear();
      for (const auto& cur : layers[depth])
        for (std::size_t r = 0; r < planes[p].dim(); ++r) next.push_back(contract(cur, 0, planes[p].row(r)));
      if (!self(self, depth + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

bool inside_kernel(const Field& f, const Matrix& c, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t i = 0; i < c.rows; ++i)
      if (dot(f, c.row(i), s.row(r)) != 0) return false;
  return true;
}

}  // namespace

IsotropyResult alpha_alt(const AltTensor& t, std::uint64_t cap) {
  const Tensor expanded = expand(t);
  AltSearch search{expanded, t.field(), t.n(), t.d(), cap, 0, false, 0, Subspace::zero(t.n())};
  std::vector<Vec> rows;
  search.dfs(rows, t.n());
  IsotropyResult out;
  out.index = search.best;
  out.witness = {search.best_space};
  out.exhausted = !search.stopped;
  out.visits = std::min(search.visits, cap);
  return out;
}

std::vector<std::vector<Subspace>> enumerate_isotropic_tuples(const Tensor& t, std::size_t k, std::uint64_t cap) {
  if (t.d() == 0) throw PreconditionError("tensor order must be positive");
  const auto planes = enumerate_grassmannian(t.field(), t.n(), k, cap);
  checked_power_count(planes.size(), t.d(), cap, "Gr(k, n)^d");
  std::vector<std::vector<Subspace>> out;
  for_each_prefix(t, planes, [&](const std::vector<std::size_t>& idx, const Matrix& c) {
    for (const auto& last : planes) {
      if (!inside_kernel(t.field(), c, last)) continue;
      std::vector<Subspace> tuple;
      for (auto i : idx) tuple.push_back(planes[i]);
      tuple.push_back(last);
      out.push_back(std::move(tuple));
    }
    return true;
  });
  return out;
}

std::vector<std::vector<Subspace>> enumerate_DT(const Tensor& t, std::uint64_t cap) {
  return enumerate_isotropic_tuples(t, 2, cap);
}

std::uint64_t count_DT(const Tensor& t, const std::vector<Subspace>* planes, std::uint64_t cap) {
  std::vector<Subspace> local;
  if (planes == nullptr) {
    local = enumerate_grassmannian(t.field(), t.n(), 2, cap);
    planes = &local;
  }
  checked_power_count(planes->size(), t.d(), cap, "Gr(2, n)^d");
  std::uint64_t count = 0;
  for_each_prefix(t, *planes, [&](const std::vector<std::size_t>&, const Matrix& c) {
    if (c.rows == 0) {
      count += planes->size();
      return true;
    }
    for (const auto& last : *planes)
      if (inside_kernel(t.field(), c, last)) ++count;
    return true;
  });
  return count;
}

HomIsotropyResult alpha_hom(const Tensor& t, std::size_t k, std::uint64_t cap) {
  if (t.d() == 0) throw PreconditionError("tensor order must be positive");
  if (k > t.n()) throw PreconditionError("subspace dimension exceeds ambient dimension");
  HomIsotropyResult out;
  const auto planes = enumerate_grassmannian(t.field(), t.n(), k, cap);
  for_each_prefix(t, planes, [&](const std::vector<std::size_t>& idx, const Matrix& c) {
    for (const auto& last : planes) {
      if (++out.visits > cap) {
        out.exhausted = false;
        return false;
      }
      if (!inside_kernel(t.field(), c, last)) continue;
      out.found = true;
      for (auto i : idx) out.witness.push_back(planes[i]);
      out.witness.push_back(last);
      return false;
    }
    return true;
  });
  return out;
}

FieldAlphaResult alpha_field_alt(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::uint64_t tensor_cap,
                                 std::uint64_t samples, std::uint64_t seed, std::uint64_t cap) {
  FieldAlphaResult out;
  const AltTensor shape(f, n, d, m);
  const std::size_t len = shape.coeffs().size();
  const std::size_t floor_value = std::min(d == 0 ? 0 : d - 1, n);
  out.value = n;
  if (len == 0) {
    out.tensors_examined = 1;
    out.minimizer = shape;
    return out;
  }
  const std::uint64_t total = pow_saturating(f.order(), len);
  const auto consider = [&](const AltTensor& t) {
    ++out.tensors_examined;
    const auto r = alpha_alt(t, cap);
    if (!r.exhausted) throw CapExceeded("alpha_alt search hit the visit cap");
    if (!out.minimizer || r.index < out.value) {
      out.value = r.index;
      out.minimizer = t;
    }
    return out.value > floor_value;
  };
  if (total <= tensor_cap) {
    out.exact = true;
    Vec c(len, 0);
    for (;;) {
      if (!consider(AltTensor(f, n, d, m, c))) break;
      std::size_t i = 0;
      while (i < len) {
        if (++c[i] < f.order()) break;
        c[i] = 0;
        ++i;
      }
      if (i == len) break;
    }
    return out;
  }
  if (samples == 0)
    throw CapExceeded("Alt^d space has " + std::to_string(total) + " maps, above the exhaustive cap; pass a sample count");
  out.exact = false;
  SplitMix64 seeds(seed);
  for (std::uint64_t s = 0; s < samples; ++s)
    if (!consider(random_alt_tensor(f, n, d, m, seeds.next()))) break;
  return out;
}

BigInt count_I1_points(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::size_t k) {
  if (k > n) throw PreconditionError("subspace dimension exceeds ambient dimension");
  const std::uint64_t q = f.order();
  const BigInt fiber_exp = BigInt(m) * (binomial(n, d) - binomial(k, d));
  const BigInt fiber = (big_pow(q, static_cast<std::uint64_t>(fiber_exp)) - 1) / (q - 1);
  return gauss_binom(n, k, q) * fiber;
}

BigInt count_I1_raw(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::size_t k, std::uint64_t cap) {
  const auto spaces = enumerate_grassmannian(f, n, k, cap);
  const AltTensor shape(f, n, d, m);
  const std::size_t len = shape.coeffs().size();
  const std::uint64_t total = pow_saturating(f.order(), len);
  if (total > cap || total * spaces.size() > cap)
    throw CapExceeded("raw I_1 enumeration exceeds the cap " + std::to_string(cap));
  std::uint64_t hits = 0;
  Vec c(len, 0);
  for (std::uint64_t t = 1; t < total; ++t) {
    std::size_t i = 0;
    while (i < len) {
      if (++c[i] < f.order()) break;
      c[i] = 0;
      ++i;
    }
    const AltTensor tensor(f, n, d, m, c);
    for (const auto& s : spaces)
      if (restrict_zero(tensor, s)) ++hits;
  }
  return BigInt(hits) / (f.order() - 1);
}

BigInt count_J1_points(const Field& f, std::size_t n, std::size_t d, std::size_t m) {
  const std::uint64_t q = f.order();
  const std::uint64_t nd = pow_saturating(n, d);
  const std::uint64_t td = std::uint64_t{1} << d;
  if (n < 2) return 0;
  const BigInt fiber = (big_pow(q, m * (nd - td)) - 1) / (q - 1);
  BigInt planes = gauss_binom(n, 2, q);
  BigInt tuples = 1;
  for (std::size_t i = 0; i < d; ++i) tuples *= planes;
  return tuples * fiber;
}

BigInt count_J1_by_fibers(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::uint64_t cap) {
  const auto planes = enumerate_grassmannian(f, n, 2, cap);
  checked_power_count(planes.size(), d, cap, "Gr(2, n)^d");
  const std::uint64_t nd = pow_saturating(n, d);
  const std::uint64_t q = f.order();
  std::vector<std::size_t> idx(d, 0);
  BigInt total = 0;
  const auto count = pow_saturating(planes.size(), d);
  for (std::uint64_t flat = 0; flat < count; ++flat) {
    std::uint64_t r = flat;
    for (std::size_t s = d; s-- > 0;) {
      idx[s] = static_cast<std::size_t>(r % planes.size());
      r /= planes.size();
    }
    // Vanishing on V_1 x ... x V_d is one linear condition per output and
    // per choice of basis rows: the outer product of the chosen rows.
    Matrix conditions(0, static_cast<std::size_t>(nd));
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << d); ++choice) {
      Vec outer{1};
      for (std::size_t s = 0; s < d; ++s) {
        const auto row = planes[idx[s]].row((choice >> s) & 1U);
        Vec next(outer.size() * n);
        for (std::size_t a = 0; a < outer.size(); ++a)
          for (std::size_t b = 0; b < n; ++b) next[a * n + b] = f.mul(outer[a], row[b]);
        outer = std::move(next);
      }
      conditions.append_row(outer);
    }
    const std::size_t rk = rank(f, std::move(conditions));
    total += (big_pow(q, m * (nd - rk)) - 1) / (q - 1);
  }
  return total;
}

BigInt count_J1_raw(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::uint64_t cap) {
  const auto planes = enumerate_grassmannian(f, n, 2, cap);
  const Tensor shape(f, n, d, m);
  const std::size_t len = shape.coeffs().size();
  const std::uint64_t tensors = pow_saturating(f.order(), len);
  const std::uint64_t tuples = pow_saturating(planes.size(), d);
  if (tensors > cap || tuples > cap || tensors * tuples > cap)
    throw CapExceeded("raw J_1 enumeration exceeds the cap " + std::to_string(cap));
  BigInt hits = 0;
  Vec c(len, 0);
  for (std::uint64_t t = 1; t < tensors; ++t) {
    std::size_t i = 0;
    while (i < len) {
      if (++c[i] < f.order()) break;
      c[i] = 0;
      ++i;
    }
    hits += count_DT(Tensor(f, n, d, m, c), &planes, cap);
  }
  return hits / (f.order() - 1);
}

}  // namespace isokit
