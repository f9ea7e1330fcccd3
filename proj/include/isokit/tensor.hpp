#pragma once

/// Multilinear maps (GF(q)^n)^d -> GF(q)^m, general and alternating.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isokit/field.hpp"
#include "isokit/subspace.hpp"

namespace isokit {

enum class TensorKind { hom, alt };

/// A d-linear map held as a dense hypermatrix of m * n^d coefficients in
/// row-major order (output coordinate, i_1, ..., i_d).
class Tensor {
 public:
  Tensor(Field field, std::size_t n, std::size_t d, std::size_t m);
  Tensor(Field field, std::size_t n, std::size_t d, std::size_t m, Vec coeffs);

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  std::size_t m() const { return m_; }
  const Vec& coeffs() const { return coeffs_; }

  /// Flat offset of (out, idx[0], ..., idx[d-1]).
  std::size_t offset(std::size_t out, std::span<const std::size_t> idx) const;
  Elem at(std::size_t out, std::span<const std::size_t> idx) const { return coeffs_[offset(out, idx)]; }
  void set(std::size_t out, std::span<const std::size_t> idx, Elem v) { coeffs_[offset(out, idx)] = v; }

  bool is_zero() const;
  bool operator==(const Tensor& o) const;

 private:
  Field field_;
  std::size_t n_, d_, m_;
  Vec coeffs_;
};

/// An alternating d-linear map, stored on strictly increasing index tuples
/// (lexicographic order), m * C(n, d) coefficients.
class AltTensor {
 public:
  AltTensor(Field field, std::size_t n, std::size_t d, std::size_t m);
  AltTensor(Field field, std::size_t n, std::size_t d, std::size_t m, Vec coeffs);

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  std::size_t m() const { return m_; }
  const Vec& coeffs() const { return coeffs_; }
  const std::vector<std::vector<std::size_t>>& tuples() const { return tuples_; }

  std::size_t tuple_count() const { return tuples_.size(); }
  Elem at(std::size_t out, std::size_t tuple) const { return coeffs_[out * tuples_.size() + tuple]; }
  void set(std::size_t out, std::size_t tuple, Elem v) { coeffs_[out * tuples_.size() + tuple] = v; }
  /// Index of a strictly increasing tuple.
  std::size_t tuple_index(std::span<const std::size_t> tuple) const;

  bool is_zero() const;
  bool operator==(const AltTensor& o) const;

 private:
  Field field_;
  std::size_t n_, d_, m_;
  std::vector<std::vector<std::size_t>> tuples_;
  Vec coeffs_;
};

/// Strictly increasing d-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t d);

Vec eval(const Tensor& t, std::span<const Vec> args);

/// sum over increasing tuples I of c_I * det(args restricted to columns I);
/// vanishes on repeated arguments in every characteristic.
Vec alt_eval(const AltTensor& t, std::span<const Vec> args);

Tensor expand(const AltTensor& t);

/// Contract slot `slot` of `t` against v, giving an order d-1 tensor.
Tensor contract(const Tensor& t, std::size_t slot, std::span<const Elem> v);

/// True iff t vanishes on every tuple of basis rows of V_1 x ... x V_d.
bool restrict_zero(const Tensor& t, std::span<const Subspace> spaces);

/// True iff t vanishes on V x ... x V.
bool restrict_zero(const AltTensor& t, const Subspace& space);

Tensor base_change(const Tensor& t, const Field& target);
AltTensor base_change(const AltTensor& t, const Field& target);

Tensor random_tensor(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed);
AltTensor random_alt_tensor(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed);

/// Sign (+1 / -1) of the permutation sorting idx, 0 if any index repeats.
int permutation_sign(std::span<const std::size_t> idx);

/// Largest coefficient count accepted for dense storage.
inline constexpr std::uint64_t kTensorSizeCap = 1U << 24U;

}  // namespace isokit
