/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/matrix.hpp"

#include <utility>

namespace qmo {
namespace {

// Fraction-free Gaussian elimination (Bareiss). Every intermediate entry is a
// minor of the input, so the division by the previous pivot is exact.
int bareiss_rank(IntMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  Int prev = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = col; c < cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
    }
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m.at(r, c) = (m.at(row, col) * m.at(r, c) - m.at(r, col) * m.at(row, c)) / prev;
      }
      m.at(r, col) = 0;
    }
    prev = m.at(row, col);
    ++row;
  }
  return row;
}

template <typename T>
bool is_nilpotent_impl(const Matrix<T>& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::dimension_mismatch, "nilpotency of non-square matrix");
  }
  const int d = m.rows();
  Matrix<T> power = m;
  for (int covered = 1;; covered *= 2) {
    if (power.is_zero()) return true;
    if (covered >= d) return false;
    power = power * power;
  }
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = Rat(m.at(r, c));
  return out;
}

std::optional<IntMatrix> as_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& e = m.at(r, c);
      if (e.get_den() != 1) return std::nullopt;
      out.at(r, c) = e.get_num();
    }
  }
  return out;
}

int rank(const IntMatrix& m) { return bareiss_rank(m); }

int rank(const RatMatrix& m) {
  // Row scaling by the positive lcm of denominators leaves the rank unchanged.
  IntMatrix cleared(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    Int scale = 1;
    for (int c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    }
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& e = m.at(r, c);
      cleared.at(r, c) = e.get_num() * (scale / e.get_den());
    }
  }
  return bareiss_rank(std::move(cleared));
}

bool is_nilpotent(const IntMatrix& m) { return is_nilpotent_impl(m); }
bool is_nilpotent(const RatMatrix& m) { return is_nilpotent_impl(m); }

}  // namespace qmo
