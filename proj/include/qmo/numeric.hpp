/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_NUMERIC_HPP
#define QMO_NUMERIC_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "qmo/errors.hpp"

namespace qmo {

// Exact scalars. Everything in this project is arbitrary-precision and
// rounding-free. Rationals are kept canonical (fully reduced, positive
// denominator), so value equality is entrywise syntactic equality and values
// can be hashed and deduplicated.
using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational from a numerator/denominator pair.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) {
    throw Error(ErrorCode::domain_error, "rational with zero denominator");
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (base 10). Any other shape is rejected.
Rat rat_from_string(const std::string& text);

/// Parses a base-10 integer, sign allowed.
Int int_from_string(const std::string& text);

/// "p/q" for non-integers, plain "p" otherwise.
std::string rat_to_string(const Rat& q);

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_int(const Int& z);
std::size_t hash_rat(const Rat& q);

inline std::size_t hash_scalar(const Int& z) { return hash_int(z); }
inline std::size_t hash_scalar(const Rat& q) { return hash_rat(q); }

}  // namespace qmo

#endif  // QMO_NUMERIC_HPP
