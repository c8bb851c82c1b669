#pragma once

#include <cstddef>
#include <vector>

#include "mha/scalar.hpp"

namespace mha {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

/// Dense rectangular matrix of exact rationals. Dimensions are fixed at
/// construction; entries are mutable until the value is handed off.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vec apply(const Vec& x) const;
  bool operator==(const Matrix& other) const;
  bool is_zero() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form. Pivot selection is the first nonzero entry in
/// row order, which keeps results bit-identical across runs.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};
Echelon echelon(Matrix m);

std::size_t rank(const Matrix& m);

/// Exact basis of the null space; empty means injective.
std::vector<Vec> kernel(const Matrix& m);

/// Rows of the reduced row echelon form with zero rows dropped. Two
/// subspaces are equal iff their bases from this function are equal.
Matrix row_space_basis(const Matrix& m);

/// Result of an exact linear solve. When the system is inconsistent,
/// `witness` is a row combination w with w^T m = 0 and w^T rhs != 0.
struct Solution {
  bool consistent = false;
  Vec value;
  Vec witness;
  bool unique = false;
};
Solution solve(const Matrix& m, const Vec& rhs);

/// Kronecker product in the row-major index convention
/// (i,j) -> i * dim + j used for all tensor bases.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace mha
