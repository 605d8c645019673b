/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/reduction.hpp"

#include <array>
#include <string>
#include <utility>

#include "qmo/numbertheory.hpp"

namespace qmo {
namespace {

void require_device_shapes(const QuantumDevice& device) {
  if (device.dim < 1) {
    throw Error(ErrorCode::schema_violation, "device dimension must be positive");
  }
  if (device.kraus.empty()) {
    throw Error(ErrorCode::schema_violation, "device needs at least one Kraus operator");
  }
  for (std::size_t j = 0; j < device.kraus.size(); ++j) {
    const RatMatrix& a = device.kraus[j];
    if (a.rows() != device.dim || a.cols() != device.dim) {
      throw Error(ErrorCode::dimension_mismatch,
                  "Kraus operator " + std::to_string(j + 1) + " is not " +
                      std::to_string(device.dim) + "x" + std::to_string(device.dim));
    }
  }
}

IntMatrix sign_flip(int axis) {
  IntMatrix p = IntMatrix::identity(3);
  p.at(axis, axis) = -1;
  return p;
}

}  // namespace

ReductionCertificate build_kraus_from_mmp(const MmpInstance& inst) {
  validate_mmp(inst);
  if (inst.dim != 3 || inst.generators.size() != 8) {
    throw Error(ErrorCode::dimension_mismatch,
                "the construction needs exactly 8 generators of size 3x3");
  }
  std::optional<std::vector<IntMatrix>> ints = integer_generators(inst);
  if (!ints) {
    throw Error(ErrorCode::domain_error, "the construction needs integer generators");
  }
  const std::vector<IntMatrix>& m = *ints;

  ReductionCertificate cert;
  cert.gram = IntMatrix(3, 3);
  for (const IntMatrix& g : m) cert.gram = cert.gram + conj_transpose(g) * g;

  // Mirroring each generator through the three sign flips cancels every
  // off-diagonal Gram term, leaving sum_{j<=32} M_j^T M_j = 4 diag(T).
  cert.extended.reserve(40);
  for (const IntMatrix& g : m) cert.extended.push_back(g);
  for (int axis = 0; axis < 3; ++axis) {
    const IntMatrix p = sign_flip(axis);
    for (const IntMatrix& g : m) cert.extended.push_back(g * p);
  }

  Int max_diag = cert.gram.at(0, 0);
  for (int i = 1; i < 3; ++i) {
    if (cert.gram.at(i, i) > max_diag) max_diag = cert.gram.at(i, i);
  }
  cert.scale_bound = ceil_twice_sqrt(max_diag);
  if (cert.scale_bound == 0) cert.scale_bound = 1;

  // Top the diagonal up to c^2: entry i of M_{32+k} is component k of a
  // four-square split of c^2 - 4 T_ii, so sum_{j<=36} M_j^T M_j = c^2 1_3.
  std::array<IntMatrix, 4> topup{IntMatrix(3, 3), IntMatrix(3, 3), IntMatrix(3, 3),
                                 IntMatrix(3, 3)};
  const Int c2 = cert.scale_bound * cert.scale_bound;
  for (int i = 0; i < 3; ++i) {
    const std::array<Int, 4> squares = four_square_decompose(c2 - 4 * cert.gram.at(i, i));
    for (int k = 0; k < 4; ++k) topup[static_cast<std::size_t>(k)].at(i, i) = squares[static_cast<std::size_t>(k)];
  }
  for (IntMatrix& t : topup) cert.extended.push_back(std::move(t));
  for (int k = 0; k < 4; ++k) cert.extended.push_back(IntMatrix(3, 3));

  cert.device.dim = 15;
  const Rat scale = make_rat(4, 5 * cert.scale_bound);
  for (int j = 0; j < 8; ++j) {
    RatMatrix a(15, 15);
    for (int block = 0; block < 5; ++block) {
      const IntMatrix& src = cert.extended[static_cast<std::size_t>(block) * 8 + j];
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          if (src.at(r, c) == 0) continue;
          a.at(block * 3 + r, c) = Rat(src.at(r, c)) * scale;
        }
      }
    }
    cert.device.kraus.push_back(std::move(a));
  }
  RatMatrix closer(15, 15);
  for (int i = 0; i < 3; ++i) closer.at(i, i) = make_rat(3, 5);
  for (int i = 3; i < 15; ++i) closer.at(i, i) = 1;
  cert.device.kraus.push_back(std::move(closer));
  return cert;
}

DeviceReport validate_device(const QuantumDevice& device) {
  require_device_shapes(device);
  RatMatrix sum(device.dim, device.dim);
  for (const RatMatrix& a : device.kraus) sum = sum + conj_transpose(a) * a;
  DeviceReport report;
  report.defect = sum - RatMatrix::identity(device.dim);
  report.ok = report.defect.is_zero();
  return report;
}

Word map_word_q_to_m(const Word& word) {
  Word out;
  for (int j : word) {
    if (j < 1 || j > 9) {
      throw Error(ErrorCode::index_out_of_range,
                  "outcome index " + std::to_string(j) + " outside 1..9");
    }
    if (j != 9) out.push_back(j);
  }
  return out;
}

ProbabilityGap compute_probability_gap(const QuantumDevice& device) {
  require_device_shapes(device);
  ProbabilityGap gap;
  gap.big_n = 1;
  for (const RatMatrix& a : device.kraus) {
    Int scale = 1;
    for (const Rat& e : a.entries()) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den().get_mpz_t());
    }
    if (scale * scale > gap.big_n) gap.big_n = scale * scale;
    gap.outcome_scale.push_back(std::move(scale));
  }
  gap.delta = make_rat(1, device.dim * gap.big_n);
  return gap;
}

std::vector<IntMatrix> integer_cleared_kraus(const QuantumDevice& device) {
  const ProbabilityGap gap = compute_probability_gap(device);
  std::vector<IntMatrix> out;
  out.reserve(device.kraus.size());
  for (std::size_t j = 0; j < device.kraus.size(); ++j) {
    const RatMatrix& a = device.kraus[j];
    const Int& scale = gap.outcome_scale[j];
    IntMatrix z(device.dim, device.dim);
    for (int r = 0; r < device.dim; ++r) {
      for (int c = 0; c < device.dim; ++c) {
        const Rat& e = a.at(r, c);
        z.at(r, c) = e.get_num() * (scale / e.get_den());
      }
    }
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace qmo
