/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/mortality.hpp"

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qmo/numeric.hpp"

namespace qmo {
namespace {

std::string closure_cap_message(std::size_t cap, int dim) {
  const long exponent = static_cast<long>(dim) * dim;
  std::string msg = "pattern closure exceeded the cap of " + std::to_string(cap) +
                    " elements; the closure can hold up to 2^(d^2) = 2^" +
                    std::to_string(exponent);
  if (exponent <= 30) {
    msg += " = " + std::to_string(1L << exponent);
  }
  msg += " patterns";
  return msg;
}

/// Breadth-first search over words in shortlex generation order, deduplicating
/// on exact partial products. Extensions of equal products stay equal, and the
/// shortest-then-lexicographic zero word always extends a retained
/// representative, so the first zero found is that canonical witness.
template <typename T>
MortalityVerdict bounded_search_impl(const std::vector<Matrix<T>>& gens, int max_depth,
                                     const SearchLimits& limits) {
  const int K = static_cast<int>(gens.size());
  struct Node {
    Matrix<T> value;
    Word word;
  };
  std::unordered_set<Matrix<T>, MatrixHash<T>> seen;
  std::vector<Node> frontier;

  auto admit = [&](Matrix<T> value, Word word, std::vector<Node>& level) {
    if (seen.count(value)) return;
    if (seen.size() >= limits.max_elements) {
      throw Error(ErrorCode::resource_cap,
                  "product search exceeded the cap of " + std::to_string(limits.max_elements) +
                      " distinct values");
    }
    seen.insert(value);
    level.push_back(Node{std::move(value), std::move(word)});
  };

  for (int j = 1; j <= K; ++j) {
    const Matrix<T>& value = gens[static_cast<std::size_t>(j) - 1];
    if (value.is_zero()) return MortalityVerdict::make_mortal({j});
    admit(value, {j}, frontier);
  }

  for (int depth = 2; depth <= max_depth && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int j = 1; j <= K; ++j) {
        Matrix<T> value = gens[static_cast<std::size_t>(j) - 1] * node.value;
        Word word = node.word;
        word.push_back(j);
        if (value.is_zero()) return MortalityVerdict::make_mortal(std::move(word));
        admit(std::move(value), std::move(word), next);
      }
    }
    frontier = std::move(next);
  }
  return MortalityVerdict::make_inconclusive(max_depth);
}

}  // namespace

void validate_mmp(const MmpInstance& inst) {
  if (inst.dim < 1) {
    throw Error(ErrorCode::schema_violation, "instance dimension must be positive");
  }
  if (inst.generators.empty()) {
    throw Error(ErrorCode::schema_violation, "instance needs at least one generator");
  }
  for (std::size_t j = 0; j < inst.generators.size(); ++j) {
    const RatMatrix& g = inst.generators[j];
    if (g.rows() != inst.dim || g.cols() != inst.dim) {
      throw Error(ErrorCode::dimension_mismatch,
                  "generator " + std::to_string(j + 1) + " is not " + std::to_string(inst.dim) +
                      "x" + std::to_string(inst.dim));
    }
  }
}

std::optional<std::vector<IntMatrix>> integer_generators(const MmpInstance& inst) {
  std::vector<IntMatrix> out;
  out.reserve(inst.generators.size());
  for (const RatMatrix& g : inst.generators) {
    std::optional<IntMatrix> m = as_integer(g);
    if (!m) return std::nullopt;
    out.push_back(std::move(*m));
  }
  return out;
}

namespace {

int checked_pattern_dim(int dim) {
  if (dim < 0) throw Error(ErrorCode::dimension_mismatch, "negative pattern dimension");
  return dim;
}

}  // namespace

BoolMatrix::BoolMatrix(int dim)
    : dim_(checked_pattern_dim(dim)),
      words_per_row_((dim + 63) / 64),
      bits_(static_cast<std::size_t>(dim) * static_cast<std::size_t>((dim + 63) / 64)) {}

bool BoolMatrix::is_zero() const {
  for (std::uint64_t w : bits_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BoolMatrixHash::operator()(const BoolMatrix& m) const {
  std::size_t h = static_cast<std::size_t>(m.dim_);
  for (std::uint64_t w : m.bits_) hash_combine(h, static_cast<std::size_t>(w));
  return h;
}

namespace {

template <typename T>
BoolMatrix bool_project_impl(const Matrix<T>& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::dimension_mismatch, "pattern projection of non-square matrix");
  }
  BoolMatrix out(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const T& e = m.at(r, c);
      if (e < 0) {
        throw Error(ErrorCode::domain_error, "pattern projection needs non-negative entries");
      }
      if (e > 0) out.set(r, c, true);
    }
  }
  return out;
}

}  // namespace

BoolMatrix bool_project(const IntMatrix& m) { return bool_project_impl(m); }
BoolMatrix bool_project(const RatMatrix& m) { return bool_project_impl(m); }

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.dim_ != b.dim_) {
    throw Error(ErrorCode::dimension_mismatch, "pattern product shape mismatch");
  }
  BoolMatrix out(a.dim_);
  const int words = a.words_per_row_;
  for (int r = 0; r < a.dim_; ++r) {
    for (int k = 0; k < a.dim_; ++k) {
      if (!a.get(r, k)) continue;
      const std::size_t out_row = static_cast<std::size_t>(r) * words;
      const std::size_t b_row = static_cast<std::size_t>(k) * words;
      for (int w = 0; w < words; ++w) out.bits_[out_row + w] |= b.bits_[b_row + w];
    }
  }
  return out;
}

MortalityVerdict MortalityVerdict::make_mortal(Word w) {
  MortalityVerdict v;
  v.kind = Kind::mortal;
  v.witness = std::move(w);
  return v;
}

MortalityVerdict MortalityVerdict::make_immortal() {
  MortalityVerdict v;
  v.kind = Kind::immortal;
  return v;
}

MortalityVerdict MortalityVerdict::make_inconclusive(int depth) {
  MortalityVerdict v;
  v.kind = Kind::inconclusive;
  v.depth_searched = depth;
  return v;
}

MortalityVerdict decide_nonneg_mortality(const MmpInstance& inst, const SearchLimits& limits) {
  validate_mmp(inst);
  const int K = static_cast<int>(inst.generators.size());
  std::vector<BoolMatrix> gens;
  gens.reserve(inst.generators.size());
  for (const RatMatrix& g : inst.generators) gens.push_back(bool_project(g));

  struct Node {
    BoolMatrix pattern;
    Word word;
  };
  std::unordered_set<BoolMatrix, BoolMatrixHash> seen;
  std::vector<Node> frontier;

  auto admit = [&](BoolMatrix pattern, Word word, std::vector<Node>& level) {
    if (seen.count(pattern)) return;
    if (seen.size() >= limits.max_elements) {
      throw Error(ErrorCode::resource_cap, closure_cap_message(limits.max_elements, inst.dim));
    }
    seen.insert(pattern);
    level.push_back(Node{std::move(pattern), std::move(word)});
  };

  for (int j = 1; j <= K; ++j) {
    const BoolMatrix& pattern = gens[static_cast<std::size_t>(j) - 1];
    if (pattern.is_zero()) return MortalityVerdict::make_mortal({j});
    admit(pattern, {j}, frontier);
  }

  // The closure is finite, so the frontier eventually empties: Immortal.
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int j = 1; j <= K; ++j) {
        BoolMatrix pattern = bool_product(gens[static_cast<std::size_t>(j) - 1], node.pattern);
        Word word = node.word;
        word.push_back(j);
        if (pattern.is_zero()) return MortalityVerdict::make_mortal(std::move(word));
        admit(std::move(pattern), std::move(word), next);
      }
    }
    frontier = std::move(next);
  }
  return MortalityVerdict::make_immortal();
}

MortalityVerdict bounded_mortality_search(const MmpInstance& inst, int max_depth,
                                          const SearchLimits& limits) {
  validate_mmp(inst);
  if (max_depth < 1) {
    throw Error(ErrorCode::bad_arguments, "search depth must be at least 1");
  }
  if (std::optional<std::vector<IntMatrix>> ints = integer_generators(inst)) {
    return bounded_search_impl(*ints, max_depth, limits);
  }
  return bounded_search_impl(inst.generators, max_depth, limits);
}

}  // namespace qmo
