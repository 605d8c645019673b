/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/measurement.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qmo {
namespace {

using WordsByProduct = std::unordered_map<IntMatrix, std::vector<Word>, MatrixHash<Int>>;

void require_positive_depth(int max_depth) {
  if (max_depth < 1) {
    throw Error(ErrorCode::bad_arguments, "search depth must be at least 1");
  }
}

void require_word_budget(std::size_t generated, const SearchLimits& limits) {
  if (generated > limits.max_elements) {
    throw Error(ErrorCode::resource_cap,
                "tree search exceeded the cap of " + std::to_string(limits.max_elements) +
                    " stored words per level");
  }
}

/// Scales each matrix by the lcm of its entry denominators. The scales are
/// positive, so products of the cleared matrices share the zero pattern (and
/// the vanishing of any fixed entry) with the original products.
std::vector<IntMatrix> cleared_integer_copies(const std::vector<RatMatrix>& mats) {
  std::vector<IntMatrix> out;
  out.reserve(mats.size());
  for (const RatMatrix& m : mats) {
    Int scale = 1;
    for (const Rat& e : m.entries()) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den().get_mpz_t());
    }
    IntMatrix z(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        const Rat& e = m.at(r, c);
        z.at(r, c) = e.get_num() * (scale / e.get_den());
      }
    }
    out.push_back(std::move(z));
  }
  return out;
}

CmopVerdict cmop_from_mortality(const MortalityVerdict& verdict) {
  CmopVerdict out;
  if (verdict.is_mortal()) {
    out.all_occur = false;
    out.witness = verdict.witness;
  } else {
    out.all_occur = true;
  }
  return out;
}

}  // namespace

State State::maximally_mixed(int dim) {
  if (dim < 1) throw Error(ErrorCode::domain_error, "state dimension must be positive");
  RatMatrix rho(dim, dim);
  const Rat weight = make_rat(1, dim);
  for (int i = 0; i < dim; ++i) rho.at(i, i) = weight;
  return State(std::move(rho));
}

State State::from_factor(const RatMatrix& factor) {
  RatMatrix gram = conj_transpose(factor) * factor;
  const Rat norm = trace(gram);
  if (norm == 0) throw Error(ErrorCode::domain_error, "state factor must be nonzero");
  return State(gram.scaled(Rat(1) / norm));
}

void validate_classical_device(const ClassicalDevice& cdev) {
  if (cdev.dim < 1) {
    throw Error(ErrorCode::schema_violation, "device dimension must be positive");
  }
  if (cdev.parts.empty()) {
    throw Error(ErrorCode::schema_violation, "device needs at least one outcome part");
  }
  RatMatrix sum(cdev.dim, cdev.dim);
  for (std::size_t j = 0; j < cdev.parts.size(); ++j) {
    const RatMatrix& q = cdev.parts[j];
    if (q.rows() != cdev.dim || q.cols() != cdev.dim) {
      throw Error(ErrorCode::dimension_mismatch,
                  "part " + std::to_string(j + 1) + " is not " + std::to_string(cdev.dim) + "x" +
                      std::to_string(cdev.dim));
    }
    for (const Rat& e : q.entries()) {
      if (e < 0) {
        throw Error(ErrorCode::schema_violation,
                    "part " + std::to_string(j + 1) + " has a negative entry");
      }
    }
    sum = sum + q;
  }
  for (int c = 0; c < cdev.dim; ++c) {
    Rat column = 0;
    for (int r = 0; r < cdev.dim; ++r) column += sum.at(r, c);
    if (column != 1) {
      throw Error(ErrorCode::schema_violation,
                  "column " + std::to_string(c + 1) + " of the part sum is not stochastic");
    }
  }
}

std::pair<State, Rat> apply_outcome(const State& state, const QuantumDevice& device, int outcome) {
  if (state.dim() != device.dim) {
    throw Error(ErrorCode::dimension_mismatch, "state and device dimensions differ");
  }
  if (outcome < 1 || outcome > device.num_outcomes()) {
    throw Error(ErrorCode::index_out_of_range,
                "outcome index " + std::to_string(outcome) + " outside 1.." +
                    std::to_string(device.num_outcomes()));
  }
  const RatMatrix& a = device.kraus[static_cast<std::size_t>(outcome) - 1];
  RatMatrix updated = a * state.rho() * conj_transpose(a);
  Rat probability = trace(updated);
  if (probability == 0) {
    throw Error(ErrorCode::impossible_outcome,
                "outcome " + std::to_string(outcome) + " has probability zero in this state");
  }
  State post(updated.scaled(Rat(1) / probability));
  return {std::move(post), std::move(probability)};
}

Rat sequence_probability(const QuantumDevice& device, const Word& word, const State& state) {
  if (state.dim() != device.dim) {
    throw Error(ErrorCode::dimension_mismatch, "state and device dimensions differ");
  }
  const RatMatrix product = word_product(device.kraus, word, device.dim);
  return trace(product * state.rho() * conj_transpose(product));
}

bool occurs_ever(const QuantumDevice& device, const Word& word) {
  return !word_product(device.kraus, word, device.dim).is_zero();
}

EmptyPortReport find_empty_ports(const QuantumDevice& device, int max_depth,
                                 const SearchLimits& limits) {
  require_positive_depth(max_depth);
  const std::vector<IntMatrix> cleared = integer_cleared_kraus(device);
  const int K = static_cast<int>(cleared.size());

  EmptyPortReport report;
  report.max_depth = max_depth;

  // Words with equal partial products are grouped and extended once per
  // group; every word of a vanishing group is reported, and vanishing groups
  // are not extended, which is exactly the minimality condition.
  WordsByProduct frontier;
  std::size_t generated = 0;
  for (int j = 1; j <= K; ++j) {
    const IntMatrix& value = cleared[static_cast<std::size_t>(j) - 1];
    require_word_budget(++generated, limits);
    if (value.is_zero()) {
      report.ports.push_back({j});
    } else {
      frontier[value].push_back({j});
    }
  }

  for (int depth = 2; depth <= max_depth && !frontier.empty(); ++depth) {
    WordsByProduct next;
    generated = 0;
    for (const auto& [value, words] : frontier) {
      for (int j = 1; j <= K; ++j) {
        IntMatrix child = cleared[static_cast<std::size_t>(j) - 1] * value;
        const bool vanished = child.is_zero();
        std::vector<Word>* bucket = vanished ? nullptr : &next[std::move(child)];
        for (const Word& w : words) {
          require_word_budget(++generated, limits);
          Word extended = w;
          extended.push_back(j);
          if (vanished) {
            report.ports.push_back(std::move(extended));
          } else {
            bucket->push_back(std::move(extended));
          }
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(report.ports.begin(), report.ports.end(), shortlex_less);
  return report;
}

Rat classical_sequence_probability(const ClassicalDevice& cdev, const Word& word,
                                   const std::vector<Rat>& input) {
  if (static_cast<int>(input.size()) != cdev.dim) {
    throw Error(ErrorCode::dimension_mismatch, "input vector length differs from the dimension");
  }
  Rat total = 0;
  for (const Rat& e : input) {
    if (e < 0) {
      throw Error(ErrorCode::domain_error, "input vector has a negative entry");
    }
    total += e;
  }
  if (total != 1) {
    throw Error(ErrorCode::domain_error, "input vector entries must sum to 1");
  }
  RatMatrix v(cdev.dim, 1);
  for (int i = 0; i < cdev.dim; ++i) v.at(i, 0) = input[static_cast<std::size_t>(i)];
  v = word_product(cdev.parts, word, cdev.dim) * v;
  Rat sum = 0;
  for (int i = 0; i < cdev.dim; ++i) sum += v.at(i, 0);
  return sum;
}

CmopVerdict decide_cmop(const ClassicalDevice& cdev, const SearchLimits& limits) {
  validate_classical_device(cdev);
  MmpInstance inst;
  inst.dim = cdev.dim;
  inst.generators = cdev.parts;
  return cmop_from_mortality(decide_nonneg_mortality(inst, limits));
}

CmopVerdict decide_cmop(const QuantumDevice& device, const SearchLimits& limits) {
  MmpInstance inst;
  inst.dim = device.dim;
  inst.generators = device.kraus;
  // decide_nonneg_mortality rejects negative entries, which is exactly the
  // regime where the pattern closure decides occurrence.
  return cmop_from_mortality(decide_nonneg_mortality(inst, limits));
}

Rat mps_amplitude(const MpsFamily& family, const Word& word) {
  if (family.dim < 1) {
    throw Error(ErrorCode::schema_violation, "family dimension must be positive");
  }
  return word_product(family.matrices, word, family.dim).at(0, 0);
}

MpsReport find_unobservable_mps(const MpsFamily& family, int max_depth,
                                const SearchLimits& limits) {
  require_positive_depth(max_depth);
  if (family.dim < 1) {
    throw Error(ErrorCode::schema_violation, "family dimension must be positive");
  }
  if (family.matrices.empty()) {
    throw Error(ErrorCode::schema_violation, "family needs at least one matrix");
  }
  for (std::size_t j = 0; j < family.matrices.size(); ++j) {
    const RatMatrix& m = family.matrices[j];
    if (m.rows() != family.dim || m.cols() != family.dim) {
      throw Error(ErrorCode::dimension_mismatch,
                  "matrix " + std::to_string(j + 1) + " is not " + std::to_string(family.dim) +
                      "x" + std::to_string(family.dim));
    }
  }
  const std::vector<IntMatrix> cleared = cleared_integer_copies(family.matrices);
  const int K = static_cast<int>(cleared.size());

  MpsReport report;
  report.max_depth = max_depth;

  // Unlike an empty-port search, a zero upper-left entry does not persist
  // under extension, so vanishing words stay in the frontier.
  WordsByProduct frontier;
  std::size_t generated = 0;
  for (int j = 1; j <= K; ++j) {
    require_word_budget(++generated, limits);
    frontier[cleared[static_cast<std::size_t>(j) - 1]].push_back({j});
  }

  for (int depth = 1;; ++depth) {
    for (const auto& [value, words] : frontier) {
      if (value.at(0, 0) == 0) {
        report.zero_words.insert(report.zero_words.end(), words.begin(), words.end());
      }
    }
    if (depth == max_depth) break;
    WordsByProduct next;
    generated = 0;
    for (const auto& [value, words] : frontier) {
      for (int j = 1; j <= K; ++j) {
        IntMatrix child = cleared[static_cast<std::size_t>(j) - 1] * value;
        std::vector<Word>& bucket = next[std::move(child)];
        for (const Word& w : words) {
          require_word_budget(++generated, limits);
          Word extended = w;
          extended.push_back(j);
          bucket.push_back(std::move(extended));
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(report.zero_words.begin(), report.zero_words.end(), shortlex_less);
  return report;
}

}  // namespace qmo
