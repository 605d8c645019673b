/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_MEASUREMENT_HPP
#define QMO_MEASUREMENT_HPP

#include <utility>
#include <vector>

#include "qmo/limits.hpp"
#include "qmo/matrix.hpp"
#include "qmo/mortality.hpp"
#include "qmo/reduction.hpp"
#include "qmo/word.hpp"

namespace qmo {

/// Real rational density matrix with exact unit trace. Only constructible via
/// the factories below, which are positive semidefinite by construction.
class State {
 public:
  static State maximally_mixed(int dim);

  /// G^dag G / tr(G^dag G); G must be nonzero. Full rank whenever G is.
  static State from_factor(const RatMatrix& factor);

  int dim() const { return rho_.rows(); }
  const RatMatrix& rho() const { return rho_; }

 private:
  explicit State(RatMatrix rho) : rho_(std::move(rho)) {}
  RatMatrix rho_;

  friend std::pair<State, Rat> apply_outcome(const State& state, const QuantumDevice& device,
                                             int outcome);
};

/// Substochastic decomposition of a column-stochastic matrix: all parts are
/// entrywise non-negative and their sum has every column summing to 1.
struct ClassicalDevice {
  int dim = 0;
  std::vector<RatMatrix> parts;

  int num_outcomes() const { return static_cast<int>(parts.size()); }
};

void validate_classical_device(const ClassicalDevice& cdev);

/// Matrix-product family with both boundary vectors fixed to e_1, so outcome
/// amplitudes are (1,1) entries of word products.
struct MpsFamily {
  int dim = 0;
  std::vector<RatMatrix> matrices;

  int num_outcomes() const { return static_cast<int>(matrices.size()); }
};

/// One selective measurement step: probability tr(A_j rho A_j^dag) and the
/// renormalized post-measurement state. Probability zero means the outcome
/// cannot happen and there is no post-state; that raises impossible_outcome.
std::pair<State, Rat> apply_outcome(const State& state, const QuantumDevice& device, int outcome);

/// tr(A_{j_n}...A_{j_1} rho A_{j_1}^dag...A_{j_n}^dag); the empty word gives 1.
Rat sequence_probability(const QuantumDevice& device, const Word& word, const State& state);

/// False iff the Kraus word product is exactly the zero matrix (equivalently:
/// the sequence has probability zero for every full-rank input).
bool occurs_ever(const QuantumDevice& device, const Word& word);

struct EmptyPortReport {
  int max_depth = 0;
  std::vector<Word> ports;  // minimal words, sorted shortest-then-lexicographic
};

/// All minimal never-occurring outcome sequences of length <= max_depth.
///
/// Level-by-level tree walk over denominator-cleared products. Words with
/// equal partial products are grouped and extended once per class (the zero
/// pattern of future products only depends on the class), zero products stop
/// their branch, and every word of a zero class is reported. Minimality means
/// no proper prefix is itself an empty port.
EmptyPortReport find_empty_ports(const QuantumDevice& device, int max_depth,
                                 const SearchLimits& limits = {});

/// sum_i (Q_{j_n}...Q_{j_1} q)_i for a probability vector q.
Rat classical_sequence_probability(const ClassicalDevice& cdev, const Word& word,
                                   const std::vector<Rat>& input);

struct CmopVerdict {
  bool all_occur = false;
  Word witness;  // empty-port witness when !all_occur

  bool exists_empty_port() const { return !all_occur; }
};

/// Complete decision for classical devices, via the non-negative mortality
/// decider on the parts.
CmopVerdict decide_cmop(const ClassicalDevice& cdev, const SearchLimits& limits = {});

/// Same decision for quantum devices whose Kraus operators are entrywise
/// non-negative (negative entries are rejected).
CmopVerdict decide_cmop(const QuantumDevice& device, const SearchLimits& limits = {});

/// (1,1) entry of the word product; both boundaries select index 1.
Rat mps_amplitude(const MpsFamily& family, const Word& word);

struct MpsReport {
  int max_depth = 0;
  std::vector<Word> zero_words;  // sorted shortest-then-lexicographic
};

/// All words of length <= max_depth with zero amplitude. A semi-decision:
/// absence up to max_depth proves nothing beyond it.
MpsReport find_unobservable_mps(const MpsFamily& family, int max_depth,
                                const SearchLimits& limits = {});

}  // namespace qmo

#endif  // QMO_MEASUREMENT_HPP
