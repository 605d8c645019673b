/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_ERRORS_HPP
#define QMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmo {

/// Machine-readable failure categories, stable across the CLI surface.
enum class ErrorCode {
  bad_arguments,
  io_error,
  malformed_json,
  schema_violation,
  dimension_mismatch,
  index_out_of_range,
  domain_error,
  impossible_outcome,
  resource_cap,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_arguments: return "bad-arguments";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::malformed_json: return "malformed-json";
    case ErrorCode::schema_violation: return "schema-violation";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::domain_error: return "domain-error";
    case ErrorCode::impossible_outcome: return "impossible-outcome";
    case ErrorCode::resource_cap: return "resource-cap";
  }
  return "unknown";
}

/// Exception with an attached code; the CLI turns it into {"error": ...} and exit 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qmo

#endif  // QMO_ERRORS_HPP
