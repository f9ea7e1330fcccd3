#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "isokit/field.hpp"

namespace isokit {

/// Dense row-major matrix over a finite field.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
  std::span<Elem> row(std::size_t r) { return {data.data() + r * cols, cols}; }

  void append_row(std::span<const Elem> v);
};

/// In-place reduced row echelon form; zero rows are dropped. Returns pivot
/// columns.
std::vector<std::size_t> rref_in_place(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Basis (in RREF) of the right kernel {x : M x = 0}.
Matrix kernel_basis(const Field& f, const Matrix& m);

Elem determinant(const Field& f, Matrix m);

/// y = M x
Vec apply(const Field& f, const Matrix& m, std::span<const Elem> x);

bool is_zero(std::span<const Elem> v);

}  // namespace isokit
