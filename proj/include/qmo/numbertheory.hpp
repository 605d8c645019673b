/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_NUMBERTHEORY_HPP
#define QMO_NUMBERTHEORY_HPP

#include <array>

#include "qmo/numeric.hpp"

namespace qmo {

/// Floor of the square root of a non-negative integer.
Int isqrt(const Int& n);

/// Smallest integer c with c^2 >= 4n, i.e. the ceiling of 2*sqrt(n).
Int ceil_twice_sqrt(const Int& n);

/// Writes n = a^2 + b^2 + c^2 + d^2 with a >= b >= c >= d >= 0.
///
/// Deterministic: scans a downward from isqrt(n), then b, then c, and returns
/// the first tuple found. Brute force; fine for the small inputs this project
/// produces.
std::array<Int, 4> four_square_decompose(const Int& n);

}  // namespace qmo

#endif  // QMO_NUMBERTHEORY_HPP
