/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_MATRIX_HPP
#define QMO_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "qmo/errors.hpp"
#include "qmo/numeric.hpp"

namespace qmo {

/// Dense exact matrix over Int or Rat, row-major.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(check_shape(rows, cols)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) {
        throw Error(ErrorCode::dimension_mismatch, "ragged matrix initializer");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(int row, int col) {
    assert(row >= 0 && row < rows_ && col >= 0 && col < cols_);
    return entries_[static_cast<std::size_t>(row) * cols_ + col];
  }

  const T& at(int row, int col) const {
    assert(row >= 0 && row < rows_ && col >= 0 && col < cols_);
    return entries_[static_cast<std::size_t>(row) * cols_ + col];
  }

  const std::vector<T>& entries() const { return entries_; }

  bool is_zero() const {
    for (const T& e : entries_) {
      if (e != 0) return false;
    }
    return true;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
  }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) {
      throw Error(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
    }
    Matrix out(rows_, other.cols_);
    T term;
    for (int r = 0; r < rows_; ++r) {
      for (int k = 0; k < cols_; ++k) {
        const T& lhs = at(r, k);
        if (lhs == 0) continue;
        for (int c = 0; c < other.cols_; ++c) {
          term = lhs * other.at(k, c);
          out.at(r, c) += term;
        }
      }
    }
    return out;
  }

  Matrix operator+(const Matrix& other) const {
    require_same_shape(other, "matrix sum shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
  }

  Matrix operator-(const Matrix& other) const {
    require_same_shape(other, "matrix difference shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
  }

  Matrix scaled(const T& factor) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * factor;
    return out;
  }

  Matrix block(int row0, int col0, int nrows, int ncols) const {
    assert(row0 >= 0 && col0 >= 0 && row0 + nrows <= rows_ && col0 + ncols <= cols_);
    Matrix out(nrows, ncols);
    for (int r = 0; r < nrows; ++r)
      for (int c = 0; c < ncols; ++c) out.at(r, c) = at(row0 + r, col0 + c);
    return out;
  }

  void set_block(int row0, int col0, const Matrix& m) {
    assert(row0 >= 0 && col0 >= 0 && row0 + m.rows_ <= rows_ && col0 + m.cols_ <= cols_);
    for (int r = 0; r < m.rows_; ++r)
      for (int c = 0; c < m.cols_; ++c) at(row0 + r, col0 + c) = m.at(r, c);
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }
  bool operator!=(const Matrix& other) const { return !(*this == other); }

 private:
  static std::vector<T> check_shape(int rows, int cols) {
    if (rows < 0 || cols < 0) {
      throw Error(ErrorCode::dimension_mismatch, "negative matrix dimension");
    }
    return std::vector<T>(static_cast<std::size_t>(rows) * cols);
  }

  void require_same_shape(const Matrix& other, const char* what) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw Error(ErrorCode::dimension_mismatch, what);
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rational(const IntMatrix& m);

/// Integer view of a rational matrix; empty when any entry has denominator != 1.
std::optional<IntMatrix> as_integer(const RatMatrix& m);

// Mixed products promote the integer side.
inline RatMatrix operator*(const IntMatrix& a, const RatMatrix& b) { return to_rational(a) * b; }
inline RatMatrix operator*(const RatMatrix& a, const IntMatrix& b) { return a * to_rational(b); }

/// Entries are real rationals, so the dagger is the plain transpose.
template <typename T>
Matrix<T> conj_transpose(const Matrix<T>& m) {
  return m.transposed();
}

template <typename T>
T trace(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::dimension_mismatch, "trace of non-square matrix");
  T sum = 0;
  for (int i = 0; i < m.rows(); ++i) sum += m.at(i, i);
  return sum;
}

template <typename T>
Matrix<T> matrix_pow(const Matrix<T>& base, unsigned long exponent) {
  if (!base.is_square()) throw Error(ErrorCode::dimension_mismatch, "power of non-square matrix");
  Matrix<T> result = Matrix<T>::identity(base.rows());
  Matrix<T> sq = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * sq;
    exponent >>= 1;
    if (exponent > 0) sq = sq * sq;
  }
  return result;
}

/// Exact rank by fraction-free (Bareiss) elimination.
int rank(const IntMatrix& m);
int rank(const RatMatrix& m);

/// True iff A^d = 0 for a d x d matrix, checked by repeated exact squaring.
bool is_nilpotent(const IntMatrix& m);
bool is_nilpotent(const RatMatrix& m);

template <typename T>
struct MatrixHash {
  std::size_t operator()(const Matrix<T>& m) const {
    std::size_t h = static_cast<std::size_t>(m.rows());
    hash_combine(h, static_cast<std::size_t>(m.cols()));
    for (const T& e : m.entries()) hash_combine(h, hash_scalar(e));
    return h;
  }
};

}  // namespace qmo

#endif  // QMO_MATRIX_HPP
