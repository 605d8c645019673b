/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_PCP_HPP
#define QMO_PCP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmo/limits.hpp"
#include "qmo/matrix.hpp"
#include "qmo/mortality.hpp"

namespace qmo {

/// Correspondence instance: two homomorphisms from a finite alphabet into
/// nonempty words over the digits {2,3}. A solution is a nonempty word w with
/// h(w) = g(w).
struct PcpInstance {
  std::vector<char> alphabet;        // order fixes the generator order of encode_pcp
  std::map<char, std::string> h;
  std::map<char, std::string> g;
};

/// Distinct single-character letters; image words nonempty over {2,3}.
void validate_pcp(const PcpInstance& inst);

/// Image of a word under one of the homomorphisms.
std::string apply_hom(const std::map<char, std::string>& hom, const std::string& word);

/// f(w) = sum_j w_j 3^(|w|-j) for digits in {1,2,3}; f of the empty word is 0,
/// the unique choice preserving f(uw) = f(u) 3^|w| + f(w).
Int three_adic(const std::string& word);

/// The conjugated pair-tracking matrix F(u,v); always integer, satisfies
/// F(u,v) F(u',v') = F(uu', vv') and F(u,v)_{1,1} = 3^|u| + f(u) - f(v).
IntMatrix pair_matrix(const std::string& u, const std::string& v);

/// Generators X_a = F(h(a), g(a)) in alphabet order, then Y_a = F(h(a), 1g(a)),
/// then the corner idempotent B = diag(1,0,0). 2|Sigma|+1 generators, 3x3.
MmpInstance encode_pcp(const PcpInstance& inst);

/// Order of the generators produced by encode_pcp, for mapping witnesses back.
int pcp_x_index(const PcpInstance& inst, char letter);   // 1-based
int pcp_y_index(const PcpInstance& inst, char letter);   // 1-based
int pcp_b_index(const PcpInstance& inst);                // 1-based

/// Shortest solution (then lexicographic in alphabet order) with at most
/// max_len letters, or nothing. Prefix-incompatible branches are pruned, which
/// does not change the answer.
std::optional<std::string> solve_pcp_bounded(const PcpInstance& inst, int max_len,
                                             const SearchLimits& limits = {});

struct CorrespondenceReport {
  struct Mismatch {
    std::string word;
    bool solves = false;       // h(w) = g(w)
    bool zero_corner = false;  // (Y_{w_1} X_{w_2} ... X_{w_n})_{1,1} = 0
  };

  int max_len = 0;
  std::vector<std::string> solutions;  // words where both sides agreed positively
  std::vector<Mismatch> mismatches;
};

/// Exhaustively compares, for every nonempty word w up to max_len, whether w
/// solves the instance with whether the product with one leading Y has a zero
/// upper-left entry. A correct encoding produces no mismatches.
CorrespondenceReport check_encoding_correspondence(const PcpInstance& inst, int max_len,
                                                   const SearchLimits& limits = {});

}  // namespace qmo

#endif  // QMO_PCP_HPP
