#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcm/scalar.hpp"

namespace tropcm {

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Field& field);

  static Matrix identity(std::size_t n, const Field& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
/// Empty when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace tropcm
