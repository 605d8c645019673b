/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/pcp.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qmo {
namespace {

bool is_image_word(const std::string& word) {
  if (word.empty()) return false;
  for (char ch : word) {
    if (ch != '2' && ch != '3') return false;
  }
  return true;
}

void require_positive_length(int max_len) {
  if (max_len < 1) {
    throw Error(ErrorCode::bad_arguments, "search length must be at least 1");
  }
}

void require_pcp_budget(std::size_t generated, const SearchLimits& limits) {
  if (generated > limits.max_elements) {
    throw Error(ErrorCode::resource_cap,
                "word enumeration exceeded the cap of " + std::to_string(limits.max_elements) +
                    " stored entries");
  }
}

const std::string& image_of(const std::map<char, std::string>& hom, char letter) {
  const auto it = hom.find(letter);
  if (it == hom.end()) {
    throw Error(ErrorCode::domain_error,
                std::string("letter '") + letter + "' is not in the alphabet");
  }
  return it->second;
}

int letter_position(const PcpInstance& inst, char letter) {
  for (std::size_t i = 0; i < inst.alphabet.size(); ++i) {
    if (inst.alphabet[i] == letter) return static_cast<int>(i);
  }
  throw Error(ErrorCode::domain_error,
              std::string("letter '") + letter + "' is not in the alphabet");
}

}  // namespace

void validate_pcp(const PcpInstance& inst) {
  if (inst.alphabet.empty()) {
    throw Error(ErrorCode::schema_violation, "alphabet must be nonempty");
  }
  std::set<char> seen;
  for (char letter : inst.alphabet) {
    if (!seen.insert(letter).second) {
      throw Error(ErrorCode::schema_violation,
                  std::string("duplicate letter '") + letter + "' in the alphabet");
    }
  }
  for (const auto* hom : {&inst.h, &inst.g}) {
    if (hom->size() != inst.alphabet.size()) {
      throw Error(ErrorCode::schema_violation,
                  "homomorphisms must map exactly the alphabet letters");
    }
    for (const auto& [letter, image] : *hom) {
      if (!seen.count(letter)) {
        throw Error(ErrorCode::schema_violation,
                    std::string("homomorphism maps unknown letter '") + letter + "'");
      }
      if (!is_image_word(image)) {
        throw Error(ErrorCode::schema_violation,
                    std::string("image of '") + letter +
                        "' must be a nonempty word over the digits 2 and 3");
      }
    }
  }
}

std::string apply_hom(const std::map<char, std::string>& hom, const std::string& word) {
  std::string out;
  for (char letter : word) out += image_of(hom, letter);
  return out;
}

Int three_adic(const std::string& word) {
  Int value = 0;
  for (char ch : word) {
    if (ch < '1' || ch > '3') {
      throw Error(ErrorCode::domain_error,
                  std::string("invalid digit '") + ch + "' in a base-3 word");
    }
    value = value * 3 + (ch - '0');
  }
  return value;
}

IntMatrix pair_matrix(const std::string& u, const std::string& v) {
  Int pow_u = 1;
  for (std::size_t i = 0; i < u.size(); ++i) pow_u *= 3;
  Int pow_v = 1;
  for (std::size_t i = 0; i < v.size(); ++i) pow_v *= 3;
  IntMatrix middle(3, 3);
  middle.at(0, 0) = pow_u;
  middle.at(1, 1) = pow_v;
  middle.at(2, 0) = three_adic(u);
  middle.at(2, 1) = three_adic(v);
  middle.at(2, 2) = 1;
  const IntMatrix s{{1, 0, 1}, {1, 1, 0}, {0, 0, 1}};
  const IntMatrix s_inv{{1, 0, -1}, {-1, 1, 1}, {0, 0, 1}};
  return s * middle * s_inv;
}

MmpInstance encode_pcp(const PcpInstance& inst) {
  validate_pcp(inst);
  MmpInstance out;
  out.dim = 3;
  out.generators.reserve(2 * inst.alphabet.size() + 1);
  for (char letter : inst.alphabet) {
    out.generators.push_back(
        to_rational(pair_matrix(image_of(inst.h, letter), image_of(inst.g, letter))));
  }
  for (char letter : inst.alphabet) {
    out.generators.push_back(
        to_rational(pair_matrix(image_of(inst.h, letter), "1" + image_of(inst.g, letter))));
  }
  RatMatrix corner(3, 3);
  corner.at(0, 0) = 1;
  out.generators.push_back(std::move(corner));
  return out;
}

int pcp_x_index(const PcpInstance& inst, char letter) {
  return 1 + letter_position(inst, letter);
}

int pcp_y_index(const PcpInstance& inst, char letter) {
  return 1 + static_cast<int>(inst.alphabet.size()) + letter_position(inst, letter);
}

int pcp_b_index(const PcpInstance& inst) {
  return 2 * static_cast<int>(inst.alphabet.size()) + 1;
}

std::optional<std::string> solve_pcp_bounded(const PcpInstance& inst, int max_len,
                                             const SearchLimits& limits) {
  validate_pcp(inst);
  require_positive_length(max_len);

  // After a partial word one image is a prefix of the other; only the
  // direction and the overhang matter for every possible continuation, so
  // states are deduplicated on that pair. Breadth-first generation order keeps
  // the shortlex-smallest word per state, which makes the first solution found
  // the shortest-then-lexicographic one.
  struct Node {
    std::string word;
    bool h_ahead = true;
    std::string overhang;
  };
  struct StateKey {
    bool h_ahead;
    std::string overhang;
    bool operator<(const StateKey& other) const {
      if (h_ahead != other.h_ahead) return h_ahead < other.h_ahead;
      return overhang < other.overhang;
    }
  };

  std::vector<Node> frontier{Node{}};
  std::set<StateKey> seen;
  std::size_t generated = 0;
  for (int depth = 1; depth <= max_len && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (char letter : inst.alphabet) {
        const std::string& h_img = image_of(inst.h, letter);
        const std::string& g_img = image_of(inst.g, letter);
        std::string lead = node.overhang + (node.h_ahead ? h_img : g_img);
        const std::string& lag = node.h_ahead ? g_img : h_img;
        bool h_ahead;
        std::string overhang;
        if (lead.size() >= lag.size()) {
          if (lead.compare(0, lag.size(), lag) != 0) continue;
          h_ahead = node.h_ahead;
          overhang = lead.substr(lag.size());
        } else {
          if (lag.compare(0, lead.size(), lead) != 0) continue;
          h_ahead = !node.h_ahead;
          overhang = lag.substr(lead.size());
        }
        if (overhang.empty()) return node.word + letter;
        if (!seen.insert(StateKey{h_ahead, overhang}).second) continue;
        require_pcp_budget(++generated, limits);
        next.push_back(Node{node.word + letter, h_ahead, std::move(overhang)});
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

CorrespondenceReport check_encoding_correspondence(const PcpInstance& inst, int max_len,
                                                   const SearchLimits& limits) {
  validate_pcp(inst);
  require_positive_length(max_len);

  std::vector<IntMatrix> x_mats;
  std::vector<IntMatrix> y_mats;
  for (char letter : inst.alphabet) {
    x_mats.push_back(pair_matrix(image_of(inst.h, letter), image_of(inst.g, letter)));
    y_mats.push_back(pair_matrix(image_of(inst.h, letter), "1" + image_of(inst.g, letter)));
  }

  CorrespondenceReport report;
  report.max_len = max_len;

  struct Node {
    std::string word;
    IntMatrix product;  // Y_{w_1} X_{w_2} ... X_{w_n}, multiplied left to right
  };
  std::vector<Node> frontier;
  std::size_t generated = 0;
  for (std::size_t i = 0; i < inst.alphabet.size(); ++i) {
    require_pcp_budget(++generated, limits);
    frontier.push_back(Node{std::string(1, inst.alphabet[i]), y_mats[i]});
  }

  for (int depth = 1;; ++depth) {
    for (const Node& node : frontier) {
      const bool solves = apply_hom(inst.h, node.word) == apply_hom(inst.g, node.word);
      const bool zero_corner = node.product.at(0, 0) == 0;
      if (solves && zero_corner) {
        report.solutions.push_back(node.word);
      } else if (solves != zero_corner) {
        report.mismatches.push_back(CorrespondenceReport::Mismatch{node.word, solves, zero_corner});
      }
    }
    if (depth == max_len) break;
    std::vector<Node> next;
    generated = 0;
    for (const Node& node : frontier) {
      for (std::size_t i = 0; i < inst.alphabet.size(); ++i) {
        require_pcp_budget(++generated, limits);
        next.push_back(Node{node.word + inst.alphabet[i], node.product * x_mats[i]});
      }
    }
    frontier = std::move(next);
  }
  return report;
}

}  // namespace qmo
