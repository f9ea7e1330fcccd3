#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "isokit/linalg.hpp"

namespace isokit {

/// A k-dimensional subspace of GF(q)^n held by its reduced row echelon
/// basis, which is unique, so value equality is subspace equality.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t n);
  static Subspace full(std::size_t n);
  /// Row space of the given vectors.
  static Subspace span(const Field& f, std::size_t n, std::span<const Vec> vectors);
  static Subspace row_space(const Field& f, Matrix m);
  /// Accepts a basis already in RREF; throws PreconditionError otherwise.
  static Subspace from_rref(std::size_t n, Matrix basis);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.rows; }
  const Matrix& basis() const { return basis_; }
  std::span<const Elem> row(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Field& f, std::span<const Elem> v) const;

  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_.rows == o.basis_.rows && basis_.data == o.basis_.data; }
  std::strong_ordering operator<=>(const Subspace& o) const;

 private:
  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// dim U + dim V - rank of the stacked bases.
std::size_t intersection_dim(const Field& f, const Subspace& u, const Subspace& v);

Subspace sum(const Field& f, const Subspace& u, const Subspace& v);

}  // namespace isokit
