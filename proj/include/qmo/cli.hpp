/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_CLI_HPP
#define QMO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qmo {
namespace cli {

/// Runs the command-line driver on `args` (argv[1..]) and returns the process
/// exit status: 0 on a decisive answer, 2 when a bounded search finished
/// without deciding, 1 on any error. All structured output is one compact
/// JSON line on `out`; errors are a single JSON object on `err` of the form
/// {"error": {"code": ..., "message": ...}}.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace qmo

#endif  // QMO_CLI_HPP
