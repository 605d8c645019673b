/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/numbertheory.hpp"

#include "qmo/errors.hpp"

namespace qmo {

Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorCode::domain_error, "square root of a negative integer");
  Int root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

Int ceil_twice_sqrt(const Int& n) {
  const Int target = 4 * n;
  Int c = isqrt(target);
  if (c * c < target) ++c;
  return c;
}

std::array<Int, 4> four_square_decompose(const Int& n) {
  if (n < 0) throw Error(ErrorCode::domain_error, "four-square decomposition of a negative integer");
  for (Int a = isqrt(n); a >= 0; --a) {
    const Int ra = n - a * a;
    Int b = isqrt(ra);
    if (b > a) b = a;
    for (; b >= 0; --b) {
      const Int rb = ra - b * b;
      Int c = isqrt(rb);
      if (c > b) c = b;
      for (; c >= 0; --c) {
        const Int rc = rb - c * c;
        const Int d = isqrt(rc);
        if (d <= c && d * d == rc) return {a, b, c, d};
      }
    }
  }
  throw Error(ErrorCode::domain_error, "no four-square decomposition found");
}

}  // namespace qmo
