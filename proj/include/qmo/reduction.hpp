/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_REDUCTION_HPP
#define QMO_REDUCTION_HPP

#include <vector>

#include "qmo/matrix.hpp"
#include "qmo/mortality.hpp"
#include "qmo/word.hpp"

namespace qmo {

/// A selective measurement device: K rational Kraus operators on a
/// d-dimensional system. A valid device satisfies sum_j A_j^dag A_j = 1_d
/// exactly; use validate_device to check.
struct QuantumDevice {
  int dim = 0;
  std::vector<RatMatrix> kraus;

  int num_outcomes() const { return static_cast<int>(kraus.size()); }
};

/// Everything produced while turning an 8-generator 3x3 integer instance into
/// a 9-outcome, 15-dimensional device.
struct ReductionCertificate {
  IntMatrix gram;                    // T = sum_j M_j^dag M_j, 3x3
  Int scale_bound;                   // c, smallest integer with c^2 >= 4 max_i T_ii (at least 1)
  std::vector<IntMatrix> extended;   // M_1..M_40; M_37..M_40 are zero
  QuantumDevice device;              // K = 9, d = 15
};

/// Builds the measurement device whose empty ports correspond to zero products
/// of the instance.
///
/// The eight generators are mirrored through the three sign matrices
/// diag(-1,1,1), diag(1,-1,1), diag(1,1,-1) to cancel off-diagonal Gram terms,
/// the diagonal is topped up to c^2 * 1_3 with four-square decompositions of
/// c^2 - 4 T_ii, and the resulting forty matrices are stacked into the left
/// column blocks of A_1..A_8 at scale 4/(5c). A_9 = (3/5) 1_3 (+) 1_12
/// completes the channel exactly.
///
/// For the all-zero instance c would be 0; it is forced up to 1, which keeps
/// the top-up column and the completeness identity intact.
ReductionCertificate build_kraus_from_mmp(const MmpInstance& inst);

struct DeviceReport {
  bool ok = false;
  RatMatrix defect;  // sum A^dag A - 1, present when !ok

  explicit operator bool() const { return ok; }
};

/// Exact check of the completeness identity.
DeviceReport validate_device(const QuantumDevice& device);

/// Drops every index equal to 9, preserving order. Indices must lie in 1..9.
Word map_word_q_to_m(const Word& word);

struct ProbabilityGap {
  Rat delta;                       // 1/(dN)
  Int big_n;                       // N = max_j N_j^2
  std::vector<Int> outcome_scale;  // N_j = lcm of the denominators of A_j
};

/// Probability floor: with the maximally mixed input, every length-n outcome
/// sequence has probability exactly 0 or at least delta^n.
ProbabilityGap compute_probability_gap(const QuantumDevice& device);

/// N_j * A_j as integer matrices; shares the zero pattern of Kraus products.
std::vector<IntMatrix> integer_cleared_kraus(const QuantumDevice& device);

}  // namespace qmo

#endif  // QMO_REDUCTION_HPP
