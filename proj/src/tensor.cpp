#include "isokit/tensor.hpp"

#include <algorithm>
#include <string>

#include "isokit/rng.hpp"

namespace isokit {

namespace {

std::size_t checked_size(std::size_t m, std::size_t n, std::size_t d) {
  const std::uint64_t nd = pow_saturating(n, d);
  if (nd > kTensorSizeCap || (m != 0 && nd * m > kTensorSizeCap))
    throw CapExceeded("tensor with m * n^d = " + std::to_string(m) + " * " + std::to_string(n) + "^" +
                      std::to_string(d) + " coefficients exceeds the dense storage cap");
  return static_cast<std::size_t>(nd * m);
}

void check_args(const Field& f, std::size_t n, std::size_t d, std::span<const Vec> args) {
  if (args.size() != d)
    throw PreconditionError("expected " + std::to_string(d) + " arguments, got " + std::to_string(args.size()));
  for (const auto& v : args) {
    if (v.size() != n) throw PreconditionError("argument length does not match ambient dimension");
    for (Elem a : v)
      if (!f.contains(a)) throw PreconditionError("argument entry is not an element of the tensor's field");
  }
}

void check_coeffs(const Field& f, const Vec& coeffs) {
  for (Elem a : coeffs)
    if (!f.contains(a)) throw PreconditionError("coefficient is not an element of the field");
}

}  // namespace

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  if (d > n) return out;
  std::vector<std::size_t> cur(d);
  for (std::size_t i = 0; i < d; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int permutation_sign(std::span<const std::size_t> idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

Tensor::Tensor(Field field, std::size_t n, std::size_t d, std::size_t m)
    : field_(std::move(field)), n_(n), d_(d), m_(m), coeffs_(checked_size(m, n, d), 0) {}

Tensor::Tensor(Field field, std::size_t n, std::size_t d, std::size_t m, Vec coeffs)
    : field_(std::move(field)), n_(n), d_(d), m_(m), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != checked_size(m, n, d))
    throw PreconditionError("tensor coefficient count must be m * n^d");
  check_coeffs(field_, coeffs_);
}

std::size_t Tensor::offset(std::size_t out, std::span<const std::size_t> idx) const {
  std::size_t off = out;
  for (std::size_t i : idx) off = off * n_ + i;
  return off;
}

bool Tensor::is_zero() const { return isokit::is_zero(coeffs_); }

bool Tensor::operator==(const Tensor& o) const {
  return field_ == o.field_ && n_ == o.n_ && d_ == o.d_ && m_ == o.m_ && coeffs_ == o.coeffs_;
}

AltTensor::AltTensor(Field field, std::size_t n, std::size_t d, std::size_t m)
    : field_(std::move(field)), n_(n), d_(d), m_(m), tuples_(increasing_tuples(n, d)), coeffs_(m * tuples_.size(), 0) {}

AltTensor::AltTensor(Field field, std::size_t n, std::size_t d, std::size_t m, Vec coeffs)
    : field_(std::move(field)), n_(n), d_(d), m_(m), tuples_(increasing_tuples(n, d)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != m * tuples_.size())
    throw PreconditionError("alternating tensor coefficient count must be m * C(n, d)");
  check_coeffs(field_, coeffs_);
}

std::size_t AltTensor::tuple_index(std::span<const std::size_t> tuple) const {
  const auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple,
                                   [](const std::vector<std::size_t>& a, std::span<const std::size_t> b) {
                                     return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                                   });
  if (it == tuples_.end() || !std::equal(it->begin(), it->end(), tuple.begin(), tuple.end()))
    throw PreconditionError("not a strictly increasing index tuple");
  return static_cast<std::size_t>(it - tuples_.begin());
}

bool AltTensor::is_zero() const { return isokit::is_zero(coeffs_); }

bool AltTensor::operator==(const AltTensor& o) const {
  return field_ == o.field_ && n_ == o.n_ && d_ == o.d_ && m_ == o.m_ && coeffs_ == o.coeffs_;
}

Tensor contract(const Tensor& t, std::size_t slot, std::span<const Elem> v) {
  if (slot >= t.d()) throw PreconditionError("contraction slot out of range");
  if (v.size() != t.n()) throw PreconditionError("vector length does not match ambient dimension");
  const Field& f = t.field();
  const std::size_t n = t.n();
  // Layout (out, i_1..i_{slot}, i_slot, rest) = (outer, n, inner).
  const std::size_t inner = static_cast<std::size_t>(pow_saturating(n, t.d() - slot - 1));
  const std::size_t outer = t.m() * static_cast<std::size_t>(pow_saturating(n, slot));
  Vec out(outer * inner, 0);
  const auto& c = t.coeffs();
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < n; ++i) {
      const Elem s = v[i];
      if (s == 0) continue;
      const std::size_t base = (o * n + i) * inner;
      for (std::size_t r = 0; r < inner; ++r)
        out[o * inner + r] = f.add(out[o * inner + r], f.mul(s, c[base + r]));
    }
  return Tensor(f, n, t.d() - 1, t.m(), std::move(out));
}

Vec eval(const Tensor& t, std::span<const Vec> args) {
  check_args(t.field(), t.n(), t.d(), args);
  Tensor cur = t;
  for (std::size_t s = t.d(); s-- > 0;) cur = contract(cur, s, args[s]);
  return cur.coeffs();
}

Vec alt_eval(const AltTensor& t, std::span<const Vec> args) {
  check_args(t.field(), t.n(), t.d(), args);
  const Field& f = t.field();
  const std::size_t d = t.d();
  Vec out(t.m(), 0);
  for (std::size_t ti = 0; ti < t.tuple_count(); ++ti) {
    const auto& tuple = t.tuples()[ti];
    Matrix minor(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) minor.at(r, c) = args[r][tuple[c]];
    const Elem det = determinant(f, std::move(minor));
    if (det == 0) continue;
    for (std::size_t o = 0; o < t.m(); ++o) out[o] = f.add(out[o], f.mul(t.at(o, ti), det));
  }
  return out;
}

Tensor expand(const AltTensor& t) {
  const Field& f = t.field();
  Tensor out(f, t.n(), t.d(), t.m());
  const std::size_t d = t.d();
  const std::size_t n = t.n();
  if (d > n) return out;
  std::vector<std::size_t> idx(d, 0);
  const std::uint64_t total = pow_saturating(n, d);
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    std::uint64_t r = flat;
    for (std::size_t s = d; s-- > 0;) {
      idx[s] = static_cast<std::size_t>(r % n);
      r /= n;
    }
    const int sign = permutation_sign(idx);
    if (sign == 0) continue;
    auto sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t ti = t.tuple_index(sorted);
    for (std::size_t o = 0; o < t.m(); ++o) {
      const Elem c = t.at(o, ti);
      out.set(o, idx, sign > 0 ? c : f.neg(c));
    }
  }
  return out;
}

bool restrict_zero(const Tensor& t, std::span<const Subspace> spaces) {
  if (spaces.size() != t.d()) throw PreconditionError("need one subspace per tensor slot");
  for (const auto& s : spaces)
    if (s.ambient() != t.n()) throw PreconditionError("subspace ambient dimension does not match the tensor");
  for (const auto& s : spaces)
    if (s.dim() == 0) return true;
  // Depth-first over basis rows, contracting one slot at a time.
  const auto rec = [&](auto&& self, const Tensor& cur, std::size_t slot) -> bool {
    if (cur.is_zero()) return true;
    if (slot == 0) return false;
    const std::size_t s = slot - 1;
    for (std::size_t r = 0; r < spaces[s].dim(); ++r)
      if (!self(self, contract(cur, s, spaces[s].row(r)), s)) return false;
    return true;
  };
  return rec(rec, t, t.d());
}

bool restrict_zero(const AltTensor& t, const Subspace& space) {
  if (space.ambient() != t.n()) throw PreconditionError("subspace ambient dimension does not match the tensor");
  if (space.dim() < t.d()) return true;
  for (const auto& choice : increasing_tuples(space.dim(), t.d())) {
    std::vector<Vec> args;
    args.reserve(choice.size());
    for (std::size_t r : choice) args.emplace_back(space.row(r).begin(), space.row(r).end());
    if (!is_zero(alt_eval(t, args))) return false;
  }
  return true;
}

Tensor base_change(const Tensor& t, const Field& target) {
  if (t.field() == target) return t;
  const Embedding emb(t.field(), target);
  return Tensor(target, t.n(), t.d(), t.m(), emb.apply(t.coeffs()));
}

AltTensor base_change(const AltTensor& t, const Field& target) {
  if (t.field() == target) return t;
  const Embedding emb(t.field(), target);
  return AltTensor(target, t.n(), t.d(), t.m(), emb.apply(t.coeffs()));
}

Tensor random_tensor(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed) {
  Tensor t(f, n, d, m);
  SplitMix64 rng(seed);
  Vec c(t.coeffs().size());
  for (auto& x : c) x = static_cast<Elem>(rng.below(f.order()));
  return Tensor(f, n, d, m, std::move(c));
}

AltTensor random_alt_tensor(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed) {
  AltTensor t(f, n, d, m);
  SplitMix64 rng(seed);
  Vec c(t.coeffs().size());
  for (auto& x : c) x = static_cast<Elem>(rng.below(f.order()));
  return AltTensor(f, n, d, m, std::move(c));
}

}  // namespace isokit
