/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/numeric.hpp"

#include <cstddef>

namespace qmo {
namespace {

bool is_integer_literal(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Int int_from_string(const std::string& text) {
  if (!is_integer_literal(text)) {
    throw Error(ErrorCode::schema_violation, "not an integer literal: \"" + text + "\"");
  }
  return Int(text, 10);
}

Rat rat_from_string(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(int_from_string(text));
  }
  if (text.find('/', slash + 1) != std::string::npos) {
    throw Error(ErrorCode::schema_violation, "not a rational literal: \"" + text + "\"");
  }
  const Int num = int_from_string(text.substr(0, slash));
  const std::string den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text[0] == '-') {
    throw Error(ErrorCode::schema_violation,
                "rational denominator must be a positive integer: \"" + text + "\"");
  }
  const Int den = int_from_string(den_text);
  if (den == 0) {
    throw Error(ErrorCode::schema_violation, "rational with zero denominator: \"" + text + "\"");
  }
  return make_rat(num, den);
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t hash_int(const Int& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(p) + 2);
  const std::size_t limbs = mpz_size(p);
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))));
  }
  return h;
}

std::size_t hash_rat(const Rat& q) {
  std::size_t h = hash_int(Int(q.get_num()));
  hash_combine(h, hash_int(Int(q.get_den())));
  return h;
}

}  // namespace qmo
