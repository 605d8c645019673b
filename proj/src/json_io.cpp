/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/json_io.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qmo {
namespace {

constexpr int kMaxSideLength = 32768;
constexpr long kMaxEntryCount = 1'048'576;

void require_object_keys(const json& j, const char* what,
                         std::initializer_list<const char*> keys) {
  if (!j.is_object()) {
    throw Error(ErrorCode::schema_violation, std::string(what) + " must be a JSON object");
  }
  for (const char* key : keys) {
    if (!j.contains(key)) {
      throw Error(ErrorCode::schema_violation,
                  std::string(what) + " is missing the key \"" + key + "\"");
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* key : keys) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw Error(ErrorCode::schema_violation,
                  std::string(what) + " has an unexpected key \"" + it.key() + "\"");
    }
  }
}

int side_length_field(const json& j, const char* key, const char* what) {
  const json& v = j.at(key);
  if (v.is_number_float()) {
    throw Error(ErrorCode::schema_violation, "floating-point numbers are not accepted");
  }
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw Error(ErrorCode::schema_violation,
                std::string(what) + " key \"" + key + "\" must be an integer");
  }
  const std::int64_t value = v.get<std::int64_t>();
  if (value < 1 || value > kMaxSideLength) {
    throw Error(ErrorCode::schema_violation,
                std::string(what) + " key \"" + key + "\" must be in 1.." +
                    std::to_string(kMaxSideLength));
  }
  return static_cast<int>(value);
}

const json& array_field(const json& j, const char* key, const char* what) {
  const json& v = j.at(key);
  if (!v.is_array()) {
    throw Error(ErrorCode::schema_violation,
                std::string(what) + " key \"" + key + "\" must be an array");
  }
  return v;
}

template <typename Scalar, Scalar (*FromJson)(const json&)>
Matrix<Scalar> matrix_from_json_impl(const json& j, const char* what) {
  require_object_keys(j, what, {"rows", "cols", "data"});
  const int rows = side_length_field(j, "rows", what);
  const int cols = side_length_field(j, "cols", what);
  if (static_cast<long>(rows) * cols > kMaxEntryCount) {
    throw Error(ErrorCode::resource_cap,
                std::string(what) + " exceeds " + std::to_string(kMaxEntryCount) + " entries");
  }
  const json& data = array_field(j, "data", what);
  if (static_cast<int>(data.size()) != rows) {
    throw Error(ErrorCode::schema_violation,
                std::string(what) + " \"data\" must have exactly \"rows\" rows");
  }
  Matrix<Scalar> m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = data[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::schema_violation,
                  std::string(what) + " row " + std::to_string(r + 1) +
                      " must be an array of exactly \"cols\" entries");
    }
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = FromJson(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

template <typename M>
json matrix_list_to_json(const std::vector<M>& mats) {
  json out = json::array();
  for (const M& m : mats) out.push_back(matrix_to_json(m));
  return out;
}

std::vector<RatMatrix> rat_matrix_list_from_json(const json& j, const char* what) {
  if (j.empty()) {
    throw Error(ErrorCode::schema_violation, std::string(what) + " must be a nonempty array");
  }
  std::vector<RatMatrix> out;
  out.reserve(j.size());
  for (const json& item : j) out.push_back(rat_matrix_from_json(item));
  return out;
}

void require_square_list(const std::vector<RatMatrix>& mats, int dim, const char* what) {
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != dim || mats[i].cols() != dim) {
      throw Error(ErrorCode::dimension_mismatch,
                  std::string(what) + " " + std::to_string(i + 1) + " is not " +
                      std::to_string(dim) + "x" + std::to_string(dim));
    }
  }
}

json scalar_schema() {
  return json{{"description", "exact integer, or rational as \"p/q\" with positive q"},
              {"oneOf", json::array({json{{"type", "integer"}},
                                     json{{"pattern", "^-?[0-9]+(/[1-9][0-9]*)?$"},
                                          {"type", "string"}}})}};
}

json matrix_schema_body() {
  return json{
      {"additionalProperties", false},
      {"properties",
       json{{"cols", json{{"minimum", 1}, {"type", "integer"}}},
            {"data",
             json{{"items", json{{"items", scalar_schema()}, {"type", "array"}}},
                  {"type", "array"}}},
            {"rows", json{{"minimum", 1}, {"type", "integer"}}}}},
      {"required", json::array({"cols", "data", "rows"})},
      {"type", "object"}};
}

json matrix_list_schema(int min_items) {
  json schema{{"items", matrix_schema_body()}, {"type", "array"}};
  schema["minItems"] = min_items;
  return schema;
}

json dim_schema() { return json{{"minimum", 1}, {"type", "integer"}}; }

json document_schema(const char* title, json properties, json required) {
  return json{{"$schema", "http://json-schema.org/draft-07/schema#"},
              {"additionalProperties", false},
              {"properties", std::move(properties)},
              {"required", std::move(required)},
              {"title", title},
              {"type", "object"}};
}

}  // namespace

json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json rat_to_json(const Rat& q) {
  if (q.get_den() == 1) return int_to_json(Int(q.get_num()));
  return json(rat_to_string(q));
}

Int int_from_json(const json& j) {
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return int_from_string(j.get<std::string>());
  if (j.is_number_float()) {
    throw Error(ErrorCode::schema_violation, "floating-point numbers are not accepted");
  }
  throw Error(ErrorCode::schema_violation, "expected an integer entry");
}

Rat rat_from_json(const json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return Rat(int_from_json(j));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_float()) {
    throw Error(ErrorCode::schema_violation, "floating-point numbers are not accepted");
  }
  throw Error(ErrorCode::schema_violation, "expected an integer or rational entry");
}

json matrix_to_json(const IntMatrix& m) {
  json data = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m.at(r, c)));
    data.push_back(std::move(row));
  }
  return json{{"cols", m.cols()}, {"data", std::move(data)}, {"rows", m.rows()}};
}

json matrix_to_json(const RatMatrix& m) {
  json data = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m.at(r, c)));
    data.push_back(std::move(row));
  }
  return json{{"cols", m.cols()}, {"data", std::move(data)}, {"rows", m.rows()}};
}

IntMatrix int_matrix_from_json(const json& j) {
  return matrix_from_json_impl<Int, int_from_json>(j, "matrix");
}

RatMatrix rat_matrix_from_json(const json& j) {
  return matrix_from_json_impl<Rat, rat_from_json>(j, "matrix");
}

json mmp_to_json(const MmpInstance& inst) {
  return json{{"dim", inst.dim}, {"matrices", matrix_list_to_json(inst.generators)}};
}

MmpInstance mmp_from_json(const json& j) {
  require_object_keys(j, "instance", {"dim", "matrices"});
  MmpInstance inst;
  inst.dim = side_length_field(j, "dim", "instance");
  inst.generators = rat_matrix_list_from_json(array_field(j, "matrices", "instance"), "matrices");
  validate_mmp(inst);
  return inst;
}

json device_to_json(const QuantumDevice& device) {
  return json{{"dim", device.dim}, {"kraus", matrix_list_to_json(device.kraus)}};
}

QuantumDevice device_from_json(const json& j) {
  require_object_keys(j, "device", {"dim", "kraus"});
  QuantumDevice device;
  device.dim = side_length_field(j, "dim", "device");
  device.kraus = rat_matrix_list_from_json(array_field(j, "kraus", "device"), "kraus");
  require_square_list(device.kraus, device.dim, "Kraus operator");
  return device;
}

json certificate_to_json(const ReductionCertificate& cert) {
  return json{{"T", matrix_to_json(cert.gram)},
              {"c", int_to_json(cert.scale_bound)},
              {"device", device_to_json(cert.device)},
              {"extended_generators", matrix_list_to_json(cert.extended)}};
}

json classical_device_to_json(const ClassicalDevice& cdev) {
  return json{{"dim", cdev.dim}, {"parts", matrix_list_to_json(cdev.parts)}};
}

ClassicalDevice classical_device_from_json(const json& j) {
  require_object_keys(j, "device", {"dim", "parts"});
  ClassicalDevice cdev;
  cdev.dim = side_length_field(j, "dim", "device");
  cdev.parts = rat_matrix_list_from_json(array_field(j, "parts", "device"), "parts");
  validate_classical_device(cdev);
  return cdev;
}

json mps_to_json(const MpsFamily& family) {
  return json{{"dim", family.dim}, {"matrices", matrix_list_to_json(family.matrices)}};
}

MpsFamily mps_from_json(const json& j) {
  require_object_keys(j, "family", {"dim", "matrices"});
  MpsFamily family;
  family.dim = side_length_field(j, "dim", "family");
  family.matrices = rat_matrix_list_from_json(array_field(j, "matrices", "family"), "matrices");
  require_square_list(family.matrices, family.dim, "family matrix");
  return family;
}

json pcp_to_json(const PcpInstance& inst) {
  json alphabet = json::array();
  for (char letter : inst.alphabet) alphabet.push_back(std::string(1, letter));
  json h = json::object();
  for (const auto& [letter, image] : inst.h) h[std::string(1, letter)] = image;
  json g = json::object();
  for (const auto& [letter, image] : inst.g) g[std::string(1, letter)] = image;
  return json{{"alphabet", std::move(alphabet)}, {"g", std::move(g)}, {"h", std::move(h)}};
}

PcpInstance pcp_from_json(const json& j) {
  require_object_keys(j, "instance", {"alphabet", "g", "h"});
  PcpInstance inst;
  const json& alphabet = array_field(j, "alphabet", "instance");
  for (const json& item : alphabet) {
    if (!item.is_string() || item.get<std::string>().size() != 1) {
      throw Error(ErrorCode::schema_violation,
                  "alphabet entries must be single-character strings");
    }
    inst.alphabet.push_back(item.get<std::string>()[0]);
  }
  const std::pair<const char*, std::map<char, std::string>*> homs[] = {{"h", &inst.h},
                                                                       {"g", &inst.g}};
  for (const auto& [key, hom] : homs) {
    const json& v = j.at(key);
    if (!v.is_object()) {
      throw Error(ErrorCode::schema_violation,
                  std::string("instance key \"") + key + "\" must be an object");
    }
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.key().size() != 1) {
        throw Error(ErrorCode::schema_violation,
                    std::string("\"") + key + "\" keys must be single-character letters");
      }
      if (!it.value().is_string()) {
        throw Error(ErrorCode::schema_violation,
                    std::string("\"") + key + "\" values must be strings");
      }
      (*hom)[it.key()[0]] = it.value().get<std::string>();
    }
  }
  validate_pcp(inst);
  return inst;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::malformed_json, e.what());
  }
}

json schema_for(const std::string& kind) {
  if (kind == "matrix") {
    json schema = matrix_schema_body();
    schema["$schema"] = "http://json-schema.org/draft-07/schema#";
    schema["title"] = "matrix";
    return schema;
  }
  if (kind == "mmp") {
    return document_schema("mmp-instance",
                           json{{"dim", dim_schema()}, {"matrices", matrix_list_schema(1)}},
                           json::array({"dim", "matrices"}));
  }
  if (kind == "device") {
    return document_schema("quantum-device",
                           json{{"dim", dim_schema()}, {"kraus", matrix_list_schema(1)}},
                           json::array({"dim", "kraus"}));
  }
  if (kind == "certificate") {
    return document_schema(
        "reduction-certificate",
        json{{"T", matrix_schema_body()},
             {"c", scalar_schema()},
             {"device",
              json{{"additionalProperties", false},
                   {"properties",
                    json{{"dim", dim_schema()}, {"kraus", matrix_list_schema(1)}}},
                   {"required", json::array({"dim", "kraus"})},
                   {"type", "object"}}},
             {"extended_generators", matrix_list_schema(40)}},
        json::array({"T", "c", "device", "extended_generators"}));
  }
  if (kind == "classical-device") {
    return document_schema("classical-device",
                           json{{"dim", dim_schema()}, {"parts", matrix_list_schema(1)}},
                           json::array({"dim", "parts"}));
  }
  if (kind == "mps") {
    return document_schema("mps-family",
                           json{{"dim", dim_schema()}, {"matrices", matrix_list_schema(1)}},
                           json::array({"dim", "matrices"}));
  }
  if (kind == "pcp") {
    const json image{{"pattern", "^[23]+$"}, {"type", "string"}};
    const json hom{{"additionalProperties", image},
                   {"propertyNames", json{{"maxLength", 1}, {"minLength", 1}}},
                   {"type", "object"}};
    return document_schema(
        "pcp-instance",
        json{{"alphabet",
              json{{"items", json{{"maxLength", 1}, {"minLength", 1}, {"type", "string"}}},
                   {"minItems", 1},
                   {"type", "array"}}},
             {"g", hom},
             {"h", hom}},
        json::array({"alphabet", "g", "h"}));
  }
  throw Error(ErrorCode::bad_arguments,
              "unknown schema kind \"" + kind +
                  "\"; available: matrix, mmp, device, certificate, classical-device, mps, pcp");
}

}  // namespace qmo
