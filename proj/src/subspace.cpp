#include "isokit/subspace.hpp"

namespace isokit {

Subspace Subspace::zero(std::size_t n) {
  Subspace s;
  s.n_ = n;
  s.basis_ = Matrix(0, n);
  return s;
}

Subspace Subspace::full(std::size_t n) {
  Subspace s;
  s.n_ = n;
  s.basis_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s.basis_.at(i, i) = 1;
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::row_space(const Field& f, Matrix m) {
  Subspace s;
  s.n_ = m.cols;
  s.pivots_ = rref_in_place(f, m);
  s.basis_ = std::move(m);
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t n, std::span<const Vec> vectors) {
  Matrix m(0, n);
  for (const auto& v : vectors) {
    if (v.size() != n) throw PreconditionError("vector length does not match ambient dimension");
    m.append_row(v);
  }
  return row_space(f, std::move(m));
}

Subspace Subspace::from_rref(std::size_t n, Matrix basis) {
  if (basis.cols != n) throw PreconditionError("basis width does not match ambient dimension");
  Subspace s;
  s.n_ = n;
  std::size_t last = 0;
  for (std::size_t r = 0; r < basis.rows; ++r) {
    std::size_t c = 0;
    while (c < n && basis.at(r, c) == 0) ++c;
    if (c == n) throw PreconditionError("basis has a zero row");
    if (basis.at(r, c) != 1) throw PreconditionError("pivot entry is not 1");
    if (r > 0 && c <= last) throw PreconditionError("pivots are not strictly increasing");
    for (std::size_t o = 0; o < basis.rows; ++o)
      if (o != r && basis.at(o, c) != 0) throw PreconditionError("pivot column is not a unit column");
    s.pivots_.push_back(c);
    last = c;
  }
  s.basis_ = std::move(basis);
  return s;
}

bool Subspace::contains(const Field& f, std::span<const Elem> v) const {
  if (v.size() != n_) throw PreconditionError("vector length does not match ambient dimension");
  // Reduce v by the echelon rows; it lies in the span iff nothing remains.
  Vec w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows; ++i) {
    const Elem c = w[pivots_[i]];
    if (c == 0) continue;
    const Elem nc = f.neg(c);
    for (std::size_t j = 0; j < n_; ++j) w[j] = f.add(w[j], f.mul(nc, basis_.at(i, j)));
  }
  return is_zero(w);
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = basis_.rows <=> o.basis_.rows; c != 0) return c;
  return basis_.data <=> o.basis_.data;
}

std::size_t intersection_dim(const Field& f, const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw PreconditionError("subspaces live in different ambient spaces");
  Matrix m = u.basis();
  for (std::size_t i = 0; i < v.dim(); ++i) m.append_row(v.row(i));
  if (m.cols == 0) m.cols = u.ambient();
  return u.dim() + v.dim() - rank(f, std::move(m));
}

Subspace sum(const Field& f, const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw PreconditionError("subspaces live in different ambient spaces");
  Matrix m = u.basis();
  m.cols = u.ambient();
  for (std::size_t i = 0; i < v.dim(); ++i) m.append_row(v.row(i));
  return Subspace::row_space(f, std::move(m));
}

}  // namespace isokit
