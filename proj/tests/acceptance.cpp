/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

// End-to-end acceptance checks. Each criterion prints one [PASS]/[FAIL] line;
// the process exits with the number of failed criteria.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qmo/matrix.hpp"
#include "qmo/measurement.hpp"
#include "qmo/mortality.hpp"
#include "qmo/numeric.hpp"
#include "qmo/pcp.hpp"
#include "qmo/reduction.hpp"
#include "qmo/word.hpp"
#include "support.hpp"

using namespace qmo;
using qmo::testing::instance_from;
using qmo::testing::random_column_split_device;
using qmo::testing::random_int_matrix;
using qmo::testing::random_scaled_orthogonal_device;
using qmo::testing::uniform_int;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

// ---------------------------------------------------------------- criterion 1

Outcome criterion_completeness() {
  Outcome outcome;
  std::mt19937 rng(1001);
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntMatrix> gens;
    for (int j = 0; j < 8; ++j) gens.push_back(random_int_matrix(rng, 3, 3, -5, 5));
    const ReductionCertificate cert = build_kraus_from_mmp(instance_from(gens));
    if (cert.device.dim != 15 || cert.device.num_outcomes() != 9) {
      outcome.fail("device shape off at trial " + std::to_string(trial));
      continue;
    }
    if (validate_device(cert.device).ok) {
      ++ok;
    } else {
      outcome.fail("completeness defect at trial " + std::to_string(trial));
    }
  }
  outcome.detail = std::to_string(ok) + "/100 devices exactly complete";
  return outcome;
}

// ---------------------------------------------------------------- criterion 2

// Unit upper-triangular integer conjugator; its inverse is integer too.
struct Conjugator {
  IntMatrix u;
  IntMatrix u_inv;
};

Conjugator random_conjugator(std::mt19937& rng) {
  const Int p = uniform_int(rng, -3, 3);
  const Int q = uniform_int(rng, -3, 3);
  const Int r = uniform_int(rng, -3, 3);
  Conjugator c;
  c.u = IntMatrix{{1, p, q}, {0, 1, r}, {0, 0, 1}};
  c.u_inv = IntMatrix{{1, -p, p * r - q}, {0, 1, -r}, {0, 0, 1}};
  return c;
}

IntMatrix selector(int d0, int d1, int d2) {
  IntMatrix m(3, 3);
  m.at(0, 0) = d0;
  m.at(1, 1) = d1;
  m.at(2, 2) = d2;
  return m;
}

Outcome criterion_reduction_correspondence() {
  Outcome outcome;
  std::mt19937 rng(1002);
  int ports_seen = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<IntMatrix> gens;
    for (int j = 0; j < 8; ++j) gens.push_back(random_int_matrix(rng, 3, 3, -2, 2));

    // plant a zero product with witness length 1 + trial % 4
    const Conjugator conj = random_conjugator(rng);
    if (conj.u * conj.u_inv != IntMatrix::identity(3)) {
      outcome.fail("conjugator inverse wrong");
      break;
    }
    const int len = 1 + trial % 4;
    std::vector<int> positions;
    while (static_cast<int>(positions.size()) < len) {
      const int pos = uniform_int(rng, 1, 8);
      bool used = false;
      for (int seen : positions) used = used || seen == pos;
      if (!used) positions.push_back(pos);
    }
    std::vector<IntMatrix> plant;
    switch (len) {
      case 1: plant = {IntMatrix(3, 3)}; break;
      case 2: plant = {selector(1, 0, 0), selector(0, 1, 1)}; break;
      case 3: plant = {selector(1, 1, 0), selector(1, 0, 1), selector(0, 1, 1)}; break;
      default:
        plant = {selector(1, 1, 0), selector(1, 0, 1), selector(0, 1, 1), selector(1, 1, 0)};
        break;
    }
    Word witness;
    for (int k = 0; k < len; ++k) {
      gens[static_cast<std::size_t>(positions[static_cast<std::size_t>(k)] - 1)] =
          conj.u * plant[static_cast<std::size_t>(k)] * conj.u_inv;
      witness.push_back(positions[static_cast<std::size_t>(k)]);
    }

    const MmpInstance inst = instance_from(gens);
    if (!word_product(inst.generators, witness, 3).is_zero()) {
      outcome.fail("plant broken at trial " + std::to_string(trial));
      continue;
    }

    const ReductionCertificate cert = build_kraus_from_mmp(inst);

    // forward: the Kraus product over the witness
    const RatMatrix product = word_product(cert.device.kraus, witness, 15);
    if (!product.block(0, 0, 3, 3).is_zero()) {
      outcome.fail("upper-left block nonzero at trial " + std::to_string(trial));
    }
    if (!is_nilpotent(product)) {
      outcome.fail("product not nilpotent at trial " + std::to_string(trial));
    }

    // backward: every empty port strips to a zero-product word
    const EmptyPortReport report = find_empty_ports(cert.device, 3);
    ports_seen += static_cast<int>(report.ports.size());
    for (const Word& port : report.ports) {
      const Word stripped = map_word_q_to_m(port);
      if (stripped.empty() || !word_product(inst.generators, stripped, 3).is_zero()) {
        outcome.fail("port " + word_to_string(port) + " does not strip to a witness at trial " +
                     std::to_string(trial));
        break;
      }
    }
  }
  if (ports_seen == 0) outcome.fail("no empty ports found on any planted instance");
  if (outcome.pass) {
    outcome.detail = "20 planted instances; " + std::to_string(ports_seen) +
                     " empty ports all stripped to witnesses";
  }
  return outcome;
}

// ---------------------------------------------------------------- criterion 3

// 2x2 zero/one patterns as 4-bit masks, bit r*2+c.
int mul2(int a, int b) {
  int out = 0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (int k = 0; k < 2; ++k) {
        if (((a >> (r * 2 + k)) & 1) != 0 && ((b >> (k * 2 + c)) & 1) != 0) {
          out |= 1 << (r * 2 + c);
          break;
        }
      }
    }
  }
  return out;
}

// Plain enumeration of every product, no dedup: first length with a zero
// product, or 0 if none up to length 16 = 2^(d^2).
int first_zero_length2(int g1, int g2) {
  if (g1 == 0 || g2 == 0) return 1;
  std::vector<std::uint8_t> level = {static_cast<std::uint8_t>(g1),
                                     static_cast<std::uint8_t>(g2)};
  for (int len = 2; len <= 16; ++len) {
    std::vector<std::uint8_t> next;
    next.reserve(level.size() * 2);
    for (std::uint8_t p : level) {
      for (int g : {g1, g2}) {
        const int prod = mul2(g, p);
        if (prod == 0) return len;
        next.push_back(static_cast<std::uint8_t>(prod));
      }
    }
    level = std::move(next);
  }
  return 0;
}

IntMatrix matrix_of_mask(int mask, int dim) {
  IntMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m.at(r, c) = (mask >> (r * dim + c)) & 1;
  }
  return m;
}

Outcome criterion_decider_vs_brute_force() {
  Outcome outcome;
  int checked = 0;
  int mortal = 0;
  for (int g1 = 0; g1 < 16 && outcome.pass; ++g1) {
    for (int g2 = 0; g2 < 16; ++g2) {
      const MmpInstance inst = instance_from({matrix_of_mask(g1, 2), matrix_of_mask(g2, 2)});
      const MortalityVerdict verdict = decide_nonneg_mortality(inst);
      const int oracle = first_zero_length2(g1, g2);
      ++checked;
      if (verdict.is_mortal() != (oracle > 0)) {
        outcome.fail("verdict disagrees at pair (" + std::to_string(g1) + "," +
                     std::to_string(g2) + ")");
        break;
      }
      if (verdict.is_mortal()) {
        ++mortal;
        if (static_cast<int>(verdict.witness.size()) != oracle) {
          outcome.fail("witness length " + std::to_string(verdict.witness.size()) +
                       " != first zero length " + std::to_string(oracle) + " at pair (" +
                       std::to_string(g1) + "," + std::to_string(g2) + ")");
          break;
        }
        if (!word_product(inst.generators, verdict.witness, 2).is_zero()) {
          outcome.fail("witness product nonzero at pair (" + std::to_string(g1) + "," +
                       std::to_string(g2) + ")");
          break;
        }
      }
    }
  }
  if (outcome.pass) {
    outcome.detail = std::to_string(checked) + " instances, " + std::to_string(mortal) +
                     " mortal, zero disagreements";
  }
  return outcome;
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion_normalization() {
  Outcome outcome;
  const MmpInstance inst = instance_from(std::vector<IntMatrix>(8, IntMatrix::identity(3)));
  const QuantumDevice device = build_kraus_from_mmp(inst).device;
  const State mixed = State::maximally_mixed(15);
  Rat total = 0;
  int words = 0;
  Word word(3);
  for (int a = 1; a <= 9; ++a) {
    for (int b = 1; b <= 9; ++b) {
      for (int c = 1; c <= 9; ++c) {
        word[0] = a;
        word[1] = b;
        word[2] = c;
        total += sequence_probability(device, word, mixed);
        ++words;
      }
    }
  }
  if (total != 1) {
    outcome.fail("sum over length-3 words is " + rat_to_string(total) + ", not 1");
  } else {
    outcome.detail = "sum over " + std::to_string(words) + " length-3 words is exactly 1";
  }
  return outcome;
}

// ---------------------------------------------------------------- criterion 5

Outcome criterion_gap() {
  Outcome outcome;
  std::mt19937 rng(1005);
  std::vector<QuantumDevice> devices;
  devices.push_back(random_scaled_orthogonal_device(rng, 2, 2));
  devices.push_back(random_scaled_orthogonal_device(rng, 3, 3));
  devices.push_back(random_scaled_orthogonal_device(rng, 4, 2));
  devices.push_back(random_scaled_orthogonal_device(rng, 4, 3));
  devices.push_back(random_column_split_device(rng, 2, 2));
  devices.push_back(random_column_split_device(rng, 3, 2));
  devices.push_back(random_column_split_device(rng, 3, 3));
  devices.push_back(random_column_split_device(rng, 4, 2));
  devices.push_back(random_column_split_device(rng, 4, 3));
  {
    QuantumDevice identity;
    identity.dim = 3;
    identity.kraus.push_back(RatMatrix::identity(3));
    devices.push_back(identity);
  }

  int checks = 0;
  int zeros = 0;
  for (std::size_t i = 0; i < devices.size(); ++i) {
    const QuantumDevice& device = devices[i];
    if (!validate_device(device).ok) {
      outcome.fail("device " + std::to_string(i) + " not complete");
      continue;
    }
    const ProbabilityGap gap = compute_probability_gap(device);
    const State mixed = State::maximally_mixed(device.dim);
    const int outcomes = device.num_outcomes();
    std::vector<Word> level = {{}};
    Rat floor = 1;
    for (int len = 1; len <= 4; ++len) {
      floor *= gap.delta;
      std::vector<Word> next;
      for (const Word& w : level) {
        for (int j = 1; j <= outcomes; ++j) {
          Word extended = w;
          extended.push_back(j);
          const Rat p = sequence_probability(device, extended, mixed);
          ++checks;
          if (p == 0) {
            ++zeros;
          } else if (p < floor) {
            outcome.fail("probability " + rat_to_string(p) + " below delta^" +
                         std::to_string(len) + " on device " + std::to_string(i));
          }
          next.push_back(std::move(extended));
        }
      }
      level = std::move(next);
    }
  }
  if (zeros == 0) outcome.fail("no zero-probability words; the bound was never exercised");
  if (outcome.pass) {
    outcome.detail = std::to_string(checks) + " probabilities on 10 devices, " +
                     std::to_string(zeros) + " exactly zero, rest above the gap";
  }
  return outcome;
}

// ---------------------------------------------------------------- criterion 6

std::string random_digits(std::mt19937& rng, int min_len, int max_len) {
  std::string word;
  for (int k = uniform_int(rng, min_len, max_len); k > 0; --k) {
    word.push_back("123"[rng() % 3]);
  }
  return word;
}

Outcome criterion_encoding() {
  Outcome outcome;
  std::mt19937 rng(1006);

  // (a) homomorphism, (b) recomputation of the conjugation from literals
  const IntMatrix s = {{1, 0, 1}, {1, 1, 0}, {0, 0, 1}};
  const IntMatrix s_inv = {{1, 0, -1}, {-1, 1, 1}, {0, 0, 1}};
  if (s * s_inv != IntMatrix::identity(3)) {
    outcome.fail("conjugation literals are not inverse");
  }
  for (int trial = 0; trial < 200 && outcome.pass; ++trial) {
    const std::string u = random_digits(rng, 0, 5);
    const std::string v = random_digits(rng, 0, 5);
    const std::string x = random_digits(rng, 0, 5);
    const std::string y = random_digits(rng, 0, 5);
    if (pair_matrix(u, v) * pair_matrix(x, y) != pair_matrix(u + x, v + y)) {
      outcome.fail("homomorphism breaks at trial " + std::to_string(trial));
      break;
    }
    Int pow_u = 1, pow_v = 1;
    for (std::size_t i = 0; i < u.size(); ++i) pow_u *= 3;
    for (std::size_t i = 0; i < v.size(); ++i) pow_v *= 3;
    IntMatrix middle(3, 3);
    middle.at(0, 0) = pow_u;
    middle.at(1, 1) = pow_v;
    middle.at(2, 0) = three_adic(u);
    middle.at(2, 1) = three_adic(v);
    middle.at(2, 2) = 1;
    if (pair_matrix(u, v) != s * middle * s_inv) {
      outcome.fail("pair matrix differs from the conjugated form at trial " +
                   std::to_string(trial));
      break;
    }
  }

  // (c) correspondence reports
  PcpInstance solvable;
  solvable.alphabet = {'a'};
  solvable.h['a'] = "2";
  solvable.g['a'] = "2";
  PcpInstance unsolvable = solvable;
  unsolvable.g['a'] = "3";
  const CorrespondenceReport solvable_report = check_encoding_correspondence(solvable, 3);
  if (!solvable_report.mismatches.empty()) {
    outcome.fail("mismatches on the solvable singleton");
  }
  if (solvable_report.solutions.size() != 3u) {
    outcome.fail("expected three solutions up to length 3 on the solvable singleton");
  }
  const CorrespondenceReport unsolvable_report = check_encoding_correspondence(unsolvable, 6);
  if (!unsolvable_report.mismatches.empty() || !unsolvable_report.solutions.empty()) {
    outcome.fail("unexpected findings on the unsolvable singleton");
  }

  // (d) encoded mortality witness B, Y_a, B
  const MmpInstance encoded = encode_pcp(solvable);
  const MortalityVerdict verdict = bounded_mortality_search(encoded, 3);
  if (!verdict.is_mortal() || verdict.witness.size() > 3u) {
    outcome.fail("no short witness on the encoded solvable instance");
  } else {
    const Word expected = {pcp_b_index(solvable), pcp_y_index(solvable, 'a'),
                           pcp_b_index(solvable)};
    if (verdict.witness != expected) {
      outcome.fail("witness is " + word_to_string(verdict.witness) + ", expected " +
                   word_to_string(expected));
    }
    if (!word_product(encoded.generators, verdict.witness, 3).is_zero()) {
      outcome.fail("reported witness is not a zero product");
    }
  }

  if (outcome.pass) {
    outcome.detail =
        "200 homomorphism pairs, both singleton reports clean, corner witness found";
  }
  return outcome;
}

// ---------------------------------------------------------------- criterion 7

// 3x3 patterns as 9-bit masks, bit r*3+c.
int mul3(int a, int b) {
  int out = 0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      for (int k = 0; k < 3; ++k) {
        if (((a >> (r * 3 + k)) & 1) != 0 && ((b >> (k * 3 + c)) & 1) != 0) {
          out |= 1 << (r * 3 + c);
          break;
        }
      }
    }
  }
  return out;
}

// Level enumeration with closure-based early exit, truncated at length 64.
int first_zero_length3(int g1, int g2) {
  if (g1 == 0 || g2 == 0) return 1;
  std::set<int> seen = {g1, g2};
  std::vector<int> frontier = {g1, g2};
  for (int len = 2; len <= 64; ++len) {
    std::vector<int> next;
    for (int p : frontier) {
      for (int g : {g1, g2}) {
        const int prod = mul3(g, p);
        if (prod == 0) return len;
        if (seen.insert(prod).second) next.push_back(prod);
      }
    }
    if (next.empty()) return 0;
    frontier = std::move(next);
  }
  return 0;
}

int mask_of_part(const RatMatrix& part) {
  int mask = 0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (part.at(r, c) != 0) mask |= 1 << (r * 3 + c);
    }
  }
  return mask;
}

ClassicalDevice random_classical_split(std::mt19937& rng, bool exclusive) {
  ClassicalDevice cdev;
  cdev.dim = 3;
  RatMatrix p1(3, 3), p2(3, 3);
  for (int c = 0; c < 3; ++c) {
    const int a = uniform_int(rng, 0, 6);
    const int b = uniform_int(rng, 0, 6 - a);
    const int column[3] = {a, b, 6 - a - b};
    for (int r = 0; r < 3; ++r) {
      if (column[r] == 0) continue;
      if (exclusive) {
        (uniform_int(rng, 0, 1) != 0 ? p1 : p2).at(r, c) = make_rat(column[r], 6);
      } else {
        const int first = uniform_int(rng, 0, column[r]);
        if (first > 0) p1.at(r, c) = make_rat(first, 6);
        if (column[r] - first > 0) p2.at(r, c) = make_rat(column[r] - first, 6);
      }
    }
  }
  cdev.parts.push_back(std::move(p1));
  cdev.parts.push_back(std::move(p2));
  return cdev;
}

Outcome criterion_cmop() {
  Outcome outcome;
  std::mt19937 rng(1007);
  const std::vector<Rat> uniform3 = {make_rat(1, 3), make_rat(1, 3), make_rat(1, 3)};
  int empty_port_devices = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const ClassicalDevice cdev = random_classical_split(rng, trial < 10);
    validate_classical_device(cdev);
    const CmopVerdict verdict = decide_cmop(cdev);
    const int oracle = first_zero_length3(mask_of_part(cdev.parts[0]), mask_of_part(cdev.parts[1]));
    if (verdict.exists_empty_port() != (oracle > 0)) {
      outcome.fail("verdict disagrees with enumeration at trial " + std::to_string(trial));
      continue;
    }
    if (verdict.exists_empty_port()) {
      ++empty_port_devices;
      if (static_cast<int>(verdict.witness.size()) != oracle) {
        outcome.fail("witness length differs from first zero length at trial " +
                     std::to_string(trial));
      }
      if (classical_sequence_probability(cdev, verdict.witness, uniform3) != 0) {
        outcome.fail("witness has nonzero probability at trial " + std::to_string(trial));
      }
    }
  }
  if (empty_port_devices == 0) {
    outcome.fail("no device had an empty port; the comparison never fired");
  }

  // single full-stochastic part: always AllOccur
  for (int trial = 0; trial < 5; ++trial) {
    ClassicalDevice cdev;
    cdev.dim = 3;
    RatMatrix q(3, 3);
    for (int c = 0; c < 3; ++c) {
      const int a = uniform_int(rng, 0, 6);
      const int b = uniform_int(rng, 0, 6 - a);
      q.at(0, c) = make_rat(a, 6);
      q.at(1, c) = make_rat(b, 6);
      q.at(2, c) = make_rat(6 - a - b, 6);
    }
    cdev.parts.push_back(std::move(q));
    validate_classical_device(cdev);
    if (!decide_cmop(cdev).all_occur) {
      outcome.fail("stochastic single part flagged mortal at trial " + std::to_string(trial));
    }
  }
  if (outcome.pass) {
    outcome.detail = "20 split devices (" + std::to_string(empty_port_devices) +
                     " with empty ports) agree with enumeration; 5 stochastic devices all-occur";
  }
  return outcome;
}

// ---------------------------------------------------------------- criterion 8

Outcome criterion_mps() {
  Outcome outcome;

  PcpInstance solvable;
  solvable.alphabet = {'a'};
  solvable.h['a'] = "2";
  solvable.g['a'] = "2";

  const auto run_one = [&outcome](const PcpInstance& inst, int max_len) {
    const auto solution = solve_pcp_bounded(inst, max_len);
    if (!solution) {
      outcome.fail("solver found nothing");
      return;
    }
    // product Y_{w_1} X_{w_2} ... X_{w_n} read temporally: X indices of the
    // letters in reverse order, then the Y index of the first letter
    Word expected;
    for (std::size_t i = solution->size(); i > 1; --i) {
      expected.push_back(pcp_x_index(inst, (*solution)[i - 1]));
    }
    expected.push_back(pcp_y_index(inst, (*solution)[0]));

    MpsFamily family;
    const MmpInstance encoded = encode_pcp(inst);
    family.dim = encoded.dim;
    family.matrices = encoded.generators;

    if (mps_amplitude(family, expected) != 0) {
      outcome.fail("encoded solution word has nonzero amplitude");
      return;
    }
    const MpsReport report =
        find_unobservable_mps(family, static_cast<int>(solution->size()));
    bool found = false;
    for (const Word& w : report.zero_words) found = found || w == expected;
    if (!found) {
      outcome.fail("search at depth " + std::to_string(solution->size()) +
                   " missed the encoded solution word " + word_to_string(expected));
    }
  };

  run_one(solvable, 3);

  PcpInstance pair;
  pair.alphabet = {'a', 'b'};
  pair.h['a'] = "23";
  pair.g['a'] = "2";
  pair.h['b'] = "3";
  pair.g['b'] = "33";
  run_one(pair, 4);

  if (outcome.pass) {
    outcome.detail = "zero-amplitude words match the solver's solutions through the encoding";
  }
  return outcome;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*fn)();
    double budget_seconds;  // 0 = no stated budget
  };
  const Entry entries[] = {
      {"channel completeness on 100 random instances", criterion_completeness, 10.0},
      {"reduction correspondence on 20 planted instances", criterion_reduction_correspondence,
       30.0},
      {"non-negative decider vs brute force, all d=2 K=2 0/1 instances",
       criterion_decider_vs_brute_force, 60.0},
      {"probability normalization over 729 length-3 words", criterion_normalization, 20.0},
      {"probability gap on 10 random complete devices", criterion_gap, 0.0},
      {"pair-matrix encoding: homomorphism, reports, corner witness", criterion_encoding, 10.0},
      {"classical occurrence vs enumeration on 25 devices", criterion_cmop, 0.0},
      {"unobservable word matches the correspondence solution", criterion_mps, 0.0},
  };

  int failures = 0;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = entry.fn();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (entry.budget_seconds > 0 && elapsed > entry.budget_seconds) {
      outcome.pass = false;
      outcome.detail += "; exceeded the " + std::to_string(entry.budget_seconds) + " s budget";
    }
    std::ostringstream line;
    line.precision(2);
    line << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << entry.name
         << " (" << std::fixed << elapsed << " s)";
    if (!outcome.detail.empty()) line << " — " << outcome.detail;
    std::cout << line.str() << std::endl;
    if (!outcome.pass) ++failures;
  }
  if (failures == 0) {
    std::cout << "all 8 acceptance criteria passed" << std::endl;
  } else {
    std::cout << failures << " acceptance criteria failed" << std::endl;
  }
  return failures;
}
