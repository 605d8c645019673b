/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_MORTALITY_HPP
#define QMO_MORTALITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qmo/limits.hpp"
#include "qmo/matrix.hpp"
#include "qmo/word.hpp"

namespace qmo {

/// A finite list of square generators. Mortality asks whether some nonempty
/// product of generators equals the zero matrix.
struct MmpInstance {
  int dim = 0;
  std::vector<RatMatrix> generators;
};

/// Checks K >= 1 and that every generator is dim x dim.
void validate_mmp(const MmpInstance& inst);

/// All generators as integer matrices, or empty if any entry is non-integral.
std::optional<std::vector<IntMatrix>> integer_generators(const MmpInstance& inst);

/// d x d zero/one pattern matrix, bit-packed one row per word group.
class BoolMatrix {
 public:
  explicit BoolMatrix(int dim);

  int dim() const { return dim_; }

  bool get(int row, int col) const {
    return (bits_[word_index(row, col)] >> bit_index(col)) & 1u;
  }

  void set(int row, int col, bool value) {
    if (value) {
      bits_[word_index(row, col)] |= std::uint64_t{1} << bit_index(col);
    } else {
      bits_[word_index(row, col)] &= ~(std::uint64_t{1} << bit_index(col));
    }
  }

  bool is_zero() const;

  bool operator==(const BoolMatrix& other) const {
    return dim_ == other.dim_ && bits_ == other.bits_;
  }
  bool operator!=(const BoolMatrix& other) const { return !(*this == other); }

 private:
  std::size_t word_index(int row, int col) const {
    return static_cast<std::size_t>(row) * words_per_row_ + static_cast<std::size_t>(col) / 64;
  }
  static unsigned bit_index(int col) { return static_cast<unsigned>(col) % 64; }

  int dim_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;

  friend BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);
  friend struct BoolMatrixHash;
};

struct BoolMatrixHash {
  std::size_t operator()(const BoolMatrix& m) const;
};

/// 1 exactly where the entry is strictly positive; negative entries are an error.
BoolMatrix bool_project(const IntMatrix& m);
BoolMatrix bool_project(const RatMatrix& m);

/// The associative pattern product (AB)' : entry (a,b) is 1 iff some k has
/// A_{a,k} = B_{k,b} = 1.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

struct MortalityVerdict {
  enum class Kind { mortal, immortal, inconclusive };

  Kind kind = Kind::inconclusive;
  Word witness;            // mortal only; shortest, then lexicographically smallest
  int depth_searched = 0;  // inconclusive only

  static MortalityVerdict make_mortal(Word w);
  static MortalityVerdict make_immortal();
  static MortalityVerdict make_inconclusive(int depth);

  bool is_mortal() const { return kind == Kind::mortal; }
  bool is_immortal() const { return kind == Kind::immortal; }
  bool is_inconclusive() const { return kind == Kind::inconclusive; }
};

/// Complete decision procedure for entrywise non-negative generators.
///
/// Runs a breadth-first closure of the projected generator patterns under the
/// bool_product, deduplicating patterns. The closure has at most 2^(d^2)
/// elements, so this always terminates with Mortal (witness of length at most
/// 2^(d^2)) or Immortal. Never returns Inconclusive.
MortalityVerdict decide_nonneg_mortality(const MmpInstance& inst, const SearchLimits& limits = {});

/// Bounded semi-decision for arbitrary integer/rational generators.
///
/// Breadth-first over words up to max_depth with deduplication on exact
/// product values (extensions of equal products stay equal). Returns Mortal
/// with the shortest-then-lexicographic witness, or Inconclusive(max_depth).
/// Never returns Immortal.
MortalityVerdict bounded_mortality_search(const MmpInstance& inst, int max_depth,
                                          const SearchLimits& limits = {});

}  // namespace qmo

#endif  // QMO_MORTALITY_HPP
