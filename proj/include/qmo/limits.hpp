/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_LIMITS_HPP
#define QMO_LIMITS_HPP

#include <cstddef>

namespace qmo {

/// Caps for the breadth-first searches. Exceeding a cap raises
/// ErrorCode::resource_cap instead of thrashing.
struct SearchLimits {
  std::size_t max_elements = std::size_t{1} << 16;
};

}  // namespace qmo

#endif  // QMO_LIMITS_HPP
