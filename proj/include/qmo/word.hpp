/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_WORD_HPP
#define QMO_WORD_HPP

#include <string>
#include <vector>

#include "qmo/matrix.hpp"

namespace qmo {

// A word is a sequence of 1-based outcome/generator indices in temporal order:
// the first entry is the first outcome observed. The matrix associated with a
// word j_1,...,j_n is always M_{j_n} ... M_{j_1}; each new outcome multiplies
// from the left.
using Word = std::vector<int>;

/// Shorter words first, ties broken lexicographically.
bool shortlex_less(const Word& a, const Word& b);

std::string word_to_string(const Word& word);

/// Parses "1,9,2". Whitespace is not accepted; indices must be >= 1.
Word word_from_string(const std::string& text);

/// M_{j_n} ... M_{j_1} over the given generators; the empty word gives 1_d.
template <typename T>
Matrix<T> word_product(const std::vector<Matrix<T>>& generators, const Word& word, int dim) {
  Matrix<T> prod = Matrix<T>::identity(dim);
  for (int j : word) {
    if (j < 1 || j > static_cast<int>(generators.size())) {
      throw Error(ErrorCode::index_out_of_range,
                  "word index " + std::to_string(j) + " outside 1.." +
                      std::to_string(generators.size()));
    }
    prod = generators[static_cast<std::size_t>(j) - 1] * prod;
  }
  return prod;
}

}  // namespace qmo

#endif  // QMO_WORD_HPP
