#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liecoh/scalar.hpp"

namespace liecoh {

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  Vector apply(const Vector& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination over the Gaussian integers.
///
/// Each row is first scaled by the lcm of its denominators; the elimination
/// then divides exactly by the previous pivot at every step. Pivot rule: the
/// first nonzero entry scanning columns left to right, rows top to bottom.
std::size_t rank_fraction_free(const Matrix& m);

/// Reduced row echelon form over the Gaussian rationals.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
Echelon reduced_row_echelon(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, in free-column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// The pivot columns of `m` (a basis of its column space, taken from `m`).
std::vector<Vector> column_space_basis(const Matrix& m);

std::size_t rank_of_vectors(const std::vector<Vector>& vectors, std::size_t dim);

Scalar determinant(const Matrix& m);

/// nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace liecoh
