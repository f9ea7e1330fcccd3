#include "isokit/linalg.hpp"

#include <algorithm>

namespace isokit {

void Matrix::append_row(std::span<const Elem> v) {
  if (rows == 0 && cols == 0) cols = v.size();
  if (v.size() != cols) throw PreconditionError("row length mismatch");
  data.insert(data.end(), v.begin(), v.end());
  ++rows;
}

std::vector<std::size_t> rref_in_place(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Elem s = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const Elem factor = m.at(i, c);
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = f.add(m.at(i, j), f.mul(nf, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.data.resize(r * m.cols);
  return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref_in_place(f, m).size(); }

Matrix kernel_basis(const Field& f, const Matrix& m) {
  Matrix red = m;
  const auto pivots = rref_in_place(f, red);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix out(0, m.cols);
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red.at(i, free));
    out.append_row(v);
  }
  rref_in_place(f, out);
  return out;
}

Elem determinant(const Field& f, Matrix m) {
  if (m.rows != m.cols) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m.at(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = f.neg(det);
    }
    const Elem pv = m.at(c, c);
    det = f.mul(det, pv);
    const Elem ipv = f.inv(pv);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem factor = f.mul(m.at(i, c), ipv);
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < n; ++j) m.at(i, j) = f.add(m.at(i, j), f.mul(nf, m.at(c, j)));
    }
  }
  return det;
}

Vec apply(const Field& f, const Matrix& m, std::span<const Elem> x) {
  Vec y(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) y[i] = dot(f, m.row(i), x);
  return y;
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem a) { return a == 0; });
}

}  // namespace isokit
