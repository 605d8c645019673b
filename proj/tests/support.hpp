/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_TESTS_SUPPORT_HPP
#define QMO_TESTS_SUPPORT_HPP

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "qmo/matrix.hpp"
#include "qmo/measurement.hpp"
#include "qmo/mortality.hpp"
#include "qmo/reduction.hpp"

namespace qmo::testing {

// All randomness in the tests flows through mt19937 with fixed seeds and
// modulo reduction, so every run of the binary sees the same inputs.
inline int uniform_int(std::mt19937& rng, int lo, int hi) {
  const unsigned span = static_cast<unsigned>(hi - lo) + 1u;
  return lo + static_cast<int>(rng() % span);
}

inline IntMatrix random_int_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = uniform_int(rng, lo, hi);
    }
  }
  return m;
}

inline MmpInstance instance_from(const std::vector<IntMatrix>& mats) {
  MmpInstance inst;
  inst.dim = mats.front().rows();
  for (const IntMatrix& m : mats) inst.generators.push_back(to_rational(m));
  return inst;
}

// Exactly orthogonal rational matrices from Pythagorean rotations and signed
// permutations. Products of these stay orthogonal, so devices built from them
// satisfy the completeness identity by construction.
inline RatMatrix plane_rotation(int dim, int i, int j, const Rat& cos, const Rat& sin) {
  RatMatrix m = RatMatrix::identity(dim);
  m.at(i, i) = cos;
  m.at(j, j) = cos;
  m.at(i, j) = -sin;
  m.at(j, i) = sin;
  return m;
}

inline RatMatrix random_signed_permutation(std::mt19937& rng, int dim) {
  std::vector<int> perm(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = dim - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
  }
  RatMatrix m(dim, dim);
  for (int c = 0; c < dim; ++c) {
    m.at(perm[static_cast<std::size_t>(c)], c) = uniform_int(rng, 0, 1) ? Rat(1) : Rat(-1);
  }
  return m;
}

inline RatMatrix random_rational_orthogonal(std::mt19937& rng, int dim) {
  static const int triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}};
  RatMatrix m = random_signed_permutation(rng, dim);
  if (dim < 2) return m;
  const int spins = uniform_int(rng, 1, 3);
  for (int s = 0; s < spins; ++s) {
    const int* t = triples[uniform_int(rng, 0, 3)];
    const int i = uniform_int(rng, 0, dim - 2);
    const int j = uniform_int(rng, i + 1, dim - 1);
    m = plane_rotation(dim, i, j, make_rat(t[0], t[2]), make_rat(t[1], t[2])) * m;
  }
  return m;
}

// A_j = c_j O_j with sum c_j^2 = 1: complete, and every word product is a
// nonzero multiple of an orthogonal matrix.
inline QuantumDevice random_scaled_orthogonal_device(std::mt19937& rng, int dim, int outcomes) {
  std::vector<Rat> weights;
  switch (outcomes) {
    case 1: weights = {Rat(1)}; break;
    case 2: weights = {make_rat(3, 5), make_rat(4, 5)}; break;
    case 3: weights = {make_rat(2, 7), make_rat(3, 7), make_rat(6, 7)}; break;
    default: std::abort();
  }
  QuantumDevice device;
  device.dim = dim;
  for (const Rat& w : weights) {
    device.kraus.push_back(random_rational_orthogonal(rng, dim).scaled(w));
  }
  return device;
}

// A_j = O_j D_j where the D_j are 0/1 diagonal selectors partitioning the
// columns: sum A^dag A = sum D_j = 1, and many word products are exactly zero.
inline QuantumDevice random_column_split_device(std::mt19937& rng, int dim, int outcomes) {
  QuantumDevice device;
  device.dim = dim;
  std::vector<int> owner(static_cast<std::size_t>(dim));
  for (int c = 0; c < dim; ++c) owner[static_cast<std::size_t>(c)] = uniform_int(rng, 0, outcomes - 1);
  owner[0] = 0;  // keep no part trivially equal to another device's
  for (int j = 0; j < outcomes; ++j) {
    RatMatrix selector(dim, dim);
    for (int c = 0; c < dim; ++c) {
      if (owner[static_cast<std::size_t>(c)] == j) selector.at(c, c) = 1;
    }
    device.kraus.push_back(random_rational_orthogonal(rng, dim) * selector);
  }
  return device;
}

// Scratch directory for CLI round trips; removed on scope exit.
class TempDir {
 public:
  TempDir() {
    namespace fs = std::filesystem;
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("qmo-tests-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

  void write(const std::string& name, const std::string& contents) const {
    std::ofstream out(path_ / name, std::ios::binary);
    out << contents;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path_ / name, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

 private:
  std::filesystem::path path_;
};

}  // namespace qmo::testing

#endif  // QMO_TESTS_SUPPORT_HPP
