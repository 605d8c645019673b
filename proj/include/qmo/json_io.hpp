/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QMO_JSON_IO_HPP
#define QMO_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "qmo/matrix.hpp"
#include "qmo/measurement.hpp"
#include "qmo/mortality.hpp"
#include "qmo/pcp.hpp"
#include "qmo/reduction.hpp"

// JSON wire formats. One shared matrix schema:
//   {"rows": r, "cols": c, "data": [[row], [row], ...]}
// Integer entries are JSON integers or decimal strings; rationals are "p/q"
// strings. Serialization is canonical: keys sorted, fractions fully reduced,
// integers emitted as JSON numbers whenever they fit in 64 bits.

namespace qmo {

using json = nlohmann::json;

json int_to_json(const Int& z);
json rat_to_json(const Rat& q);
Int int_from_json(const json& j);
Rat rat_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
json matrix_to_json(const RatMatrix& m);
IntMatrix int_matrix_from_json(const json& j);
RatMatrix rat_matrix_from_json(const json& j);

json mmp_to_json(const MmpInstance& inst);
MmpInstance mmp_from_json(const json& j);

json device_to_json(const QuantumDevice& device);
QuantumDevice device_from_json(const json& j);

json certificate_to_json(const ReductionCertificate& cert);

json classical_device_to_json(const ClassicalDevice& cdev);
ClassicalDevice classical_device_from_json(const json& j);

json mps_to_json(const MpsFamily& family);
MpsFamily mps_from_json(const json& j);

json pcp_to_json(const PcpInstance& inst);
PcpInstance pcp_from_json(const json& j);

/// Parses text, mapping parse failures to ErrorCode::malformed_json.
json parse_json(const std::string& text);

/// JSON schema documents served by `qmo --schema <kind>`; kinds are matrix,
/// mmp, device, certificate, classical-device, mps, pcp.
json schema_for(const std::string& kind);

}  // namespace qmo

#endif  // QMO_JSON_IO_HPP
