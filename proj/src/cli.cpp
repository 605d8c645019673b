/**
 * Copyright (c) 2026 the qmo developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qmo/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmo/json_io.hpp"
#include "qmo/limits.hpp"

namespace qmo {
namespace cli {
namespace {

constexpr const char* kVersion = "qmo 0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io_error, "cannot open \"" + path + "\" for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::io_error, "failed while reading \"" + path + "\"");
  }
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::io_error, "cannot open \"" + path + "\" for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw Error(ErrorCode::io_error, "failed while writing \"" + path + "\"");
  }
}

json read_json_file(const std::string& path) { return parse_json(read_file(path)); }

void emit(std::ostream& out, const json& doc) { out << doc.dump() << "\n"; }

void emit_or_write(const std::string& output_path, const json& doc, std::ostream& out) {
  if (output_path.empty()) {
    emit(out, doc);
  } else {
    write_file(output_path, doc.dump() + "\n");
  }
}

json word_to_json(const Word& word) {
  json out = json::array();
  for (int j : word) out.push_back(j);
  return out;
}

json words_to_json(const std::vector<Word>& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(word_to_json(w));
  return out;
}

QuantumDevice load_valid_device(const std::string& path) {
  QuantumDevice device = device_from_json(read_json_file(path));
  if (!validate_device(device)) {
    throw Error(ErrorCode::domain_error,
                "Kraus operators do not satisfy the completeness identity");
  }
  return device;
}

State parse_state(const std::string& text, int dim) {
  if (text == "mixed") return State::maximally_mixed(dim);
  const std::string prefix = "factor:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string path = text.substr(prefix.size());
    return State::from_factor(rat_matrix_from_json(read_json_file(path)));
  }
  throw Error(ErrorCode::bad_arguments, "--state must be \"mixed\" or \"factor:<matrix.json>\"");
}

int run_mortal(const std::string& input, bool nonneg, bool has_depth, int depth,
               const SearchLimits& limits, std::ostream& out) {
  if (nonneg == has_depth) {
    throw Error(ErrorCode::bad_arguments, "pass exactly one of --nonneg or --max-depth");
  }
  const MmpInstance inst = mmp_from_json(read_json_file(input));
  const MortalityVerdict verdict = nonneg ? decide_nonneg_mortality(inst, limits)
                                          : bounded_mortality_search(inst, depth, limits);
  if (verdict.is_mortal()) {
    emit(out, json{{"verdict", "mortal"}, {"witness", word_to_json(verdict.witness)}});
    return 0;
  }
  if (verdict.is_immortal()) {
    emit(out, json{{"verdict", "immortal"}});
    return 0;
  }
  emit(out, json{{"depth", verdict.depth_searched}, {"verdict", "inconclusive"}});
  return 2;
}

int run_reduce(const std::string& input, const std::string& output,
               const std::string& certificate, std::ostream& out) {
  const MmpInstance inst = mmp_from_json(read_json_file(input));
  const ReductionCertificate cert = build_kraus_from_mmp(inst);
  emit_or_write(output, device_to_json(cert.device), out);
  if (!certificate.empty()) {
    write_file(certificate, certificate_to_json(cert).dump() + "\n");
  }
  return 0;
}

int run_simulate_prob(const std::string& device_path, const std::string& word_text,
                      const std::string& state_text, std::ostream& out) {
  const QuantumDevice device = load_valid_device(device_path);
  const Word word = word_from_string(word_text);
  const State state = parse_state(state_text, device.dim);
  const Rat probability = sequence_probability(device, word, state);
  emit(out, json{{"probability", rat_to_string(probability)}});
  return 0;
}

int run_simulate_empty_ports(const std::string& device_path, int depth,
                             const SearchLimits& limits, std::ostream& out) {
  const QuantumDevice device = load_valid_device(device_path);
  const EmptyPortReport report = find_empty_ports(device, depth, limits);
  emit(out, json{{"max_depth", report.max_depth}, {"ports", words_to_json(report.ports)}});
  return 0;
}

int run_cmop(const std::string& input, bool quantum, const SearchLimits& limits,
             std::ostream& out) {
  CmopVerdict verdict;
  if (quantum) {
    verdict = decide_cmop(load_valid_device(input), limits);
  } else {
    verdict = decide_cmop(classical_device_from_json(read_json_file(input)), limits);
  }
  if (verdict.all_occur) {
    emit(out, json{{"verdict", "all-occur"}});
  } else {
    emit(out,
         json{{"verdict", "exists-empty-port"}, {"witness", word_to_json(verdict.witness)}});
  }
  return 0;
}

int run_mps_search(const std::string& input, int depth, const SearchLimits& limits,
                   std::ostream& out) {
  const MpsFamily family = mps_from_json(read_json_file(input));
  const MpsReport report = find_unobservable_mps(family, depth, limits);
  emit(out,
       json{{"max_depth", report.max_depth}, {"zero_words", words_to_json(report.zero_words)}});
  return 0;
}

int run_pcp_encode(const std::string& input, const std::string& output, std::ostream& out) {
  const PcpInstance inst = pcp_from_json(read_json_file(input));
  emit_or_write(output, mmp_to_json(encode_pcp(inst)), out);
  return 0;
}

int run_pcp_check(const std::string& input, int max_len, const SearchLimits& limits,
                  std::ostream& out) {
  const PcpInstance inst = pcp_from_json(read_json_file(input));
  const CorrespondenceReport report = check_encoding_correspondence(inst, max_len, limits);
  json mismatches = json::array();
  for (const CorrespondenceReport::Mismatch& m : report.mismatches) {
    mismatches.push_back(
        json{{"solves", m.solves}, {"word", m.word}, {"zero_corner", m.zero_corner}});
  }
  emit(out, json{{"max_len", report.max_len},
                 {"mismatches", std::move(mismatches)},
                 {"solutions", report.solutions}});
  return 0;
}

int run_pcp_solve(const std::string& input, int max_len, const SearchLimits& limits,
                  std::ostream& out) {
  const PcpInstance inst = pcp_from_json(read_json_file(input));
  if (std::optional<std::string> solution = solve_pcp_bounded(inst, max_len, limits)) {
    emit(out, json{{"solution", *solution}});
    return 0;
  }
  emit(out, json{{"max_len", max_len}, {"verdict", "none"}});
  return 2;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"exact tools for matrix mortality, measurement devices, and word encodings"};
  app.name("qmo");
  app.set_version_flag("--version", std::string(kVersion));

  std::string schema_kind;
  app.add_option("--schema", schema_kind,
                 "print the JSON schema for a document kind "
                 "(matrix, mmp, device, certificate, classical-device, mps, pcp)");

  const std::size_t default_cap = SearchLimits{}.max_elements;

  auto* mortal = app.add_subcommand("mortal", "decide or search mortality of a matrix list");
  std::string mortal_input;
  mortal->add_option("--input", mortal_input, "instance JSON file")->required();
  bool mortal_nonneg = false;
  mortal->add_flag("--nonneg", mortal_nonneg,
                   "complete decision for entrywise non-negative generators");
  int mortal_depth = 0;
  auto* mortal_depth_opt =
      mortal->add_option("--max-depth", mortal_depth, "bounded search up to this word length");
  std::size_t mortal_cap = default_cap;
  mortal->add_option("--max-elements", mortal_cap, "cap on stored search elements");

  auto* reduce = app.add_subcommand(
      "reduce", "build a measurement device from an 8-generator 3x3 integer instance");
  std::string reduce_input;
  reduce->add_option("--input", reduce_input, "instance JSON file")->required();
  std::string reduce_output;
  reduce->add_option("--output", reduce_output, "device JSON file (stdout when omitted)");
  std::string reduce_certificate;
  reduce->add_option("--certificate", reduce_certificate, "also write the full certificate here");

  auto* simulate = app.add_subcommand("simulate", "exact sequential measurement queries");
  simulate->require_subcommand(1);
  auto* prob = simulate->add_subcommand("prob", "probability of one outcome sequence");
  std::string prob_device;
  prob->add_option("--device", prob_device, "device JSON file")->required();
  std::string prob_word;
  prob->add_option("--word", prob_word, "comma-separated outcome indices, e.g. 1,9,2")
      ->required();
  std::string prob_state = "mixed";
  prob->add_option("--state", prob_state, "input state: mixed or factor:<matrix.json>");
  auto* ports = simulate->add_subcommand("empty-ports", "minimal never-occurring sequences");
  std::string ports_device;
  ports->add_option("--device", ports_device, "device JSON file")->required();
  int ports_depth = 0;
  ports->add_option("--max-depth", ports_depth, "search up to this sequence length")->required();
  std::size_t ports_cap = default_cap;
  ports->add_option("--max-elements", ports_cap, "cap on stored search elements");

  auto* cmop = app.add_subcommand("cmop", "classical measurement occurrence");
  cmop->require_subcommand(1);
  auto* cmop_decide = cmop->add_subcommand("decide", "complete occurrence decision");
  std::string cmop_input;
  cmop_decide->add_option("--input", cmop_input, "device JSON file")->required();
  bool cmop_quantum = false;
  cmop_decide->add_flag("--quantum", cmop_quantum,
                        "input is a quantum device with entrywise non-negative operators");
  std::size_t cmop_cap = default_cap;
  cmop_decide->add_option("--max-elements", cmop_cap, "cap on stored search elements");

  auto* mps = app.add_subcommand("mps", "matrix-product outcome amplitudes");
  mps->require_subcommand(1);
  auto* mps_search = mps->add_subcommand("search", "words with exactly zero amplitude");
  std::string mps_input;
  mps_search->add_option("--input", mps_input, "family JSON file")->required();
  int mps_depth = 0;
  mps_search->add_option("--max-depth", mps_depth, "search up to this word length")->required();
  std::size_t mps_cap = default_cap;
  mps_search->add_option("--max-elements", mps_cap, "cap on stored search elements");

  auto* pcp = app.add_subcommand("pcp", "correspondence instances and their matrix encoding");
  pcp->require_subcommand(1);
  auto* pcp_encode = pcp->add_subcommand("encode", "generator list for an instance");
  std::string pcp_encode_input;
  pcp_encode->add_option("--input", pcp_encode_input, "instance JSON file")->required();
  std::string pcp_encode_output;
  pcp_encode->add_option("--output", pcp_encode_output,
                         "instance JSON file to write (stdout when omitted)");
  auto* pcp_check = pcp->add_subcommand("check", "compare solutions with zero-corner products");
  std::string pcp_check_input;
  pcp_check->add_option("--input", pcp_check_input, "instance JSON file")->required();
  int pcp_check_len = 0;
  pcp_check->add_option("--max-len", pcp_check_len, "check words up to this length")->required();
  std::size_t pcp_check_cap = default_cap;
  pcp_check->add_option("--max-elements", pcp_check_cap, "cap on stored search elements");
  auto* pcp_solve = pcp->add_subcommand("solve", "shortest solution word, if any");
  std::string pcp_solve_input;
  pcp_solve->add_option("--input", pcp_solve_input, "instance JSON file")->required();
  int pcp_solve_len = 0;
  pcp_solve->add_option("--max-len", pcp_solve_len, "search words up to this length")->required();
  std::size_t pcp_solve_cap = default_cap;
  pcp_solve->add_option("--max-elements", pcp_solve_cap, "cap on stored search elements");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qmo");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    out << target->help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::bad_arguments, e.what());
  }

  if (!schema_kind.empty()) {
    if (app.get_subcommands().size() > 0) {
      throw Error(ErrorCode::bad_arguments, "--schema cannot be combined with a subcommand");
    }
    emit(out, schema_for(schema_kind));
    return 0;
  }

  SearchLimits limits;
  if (mortal->parsed()) {
    limits.max_elements = mortal_cap;
    return run_mortal(mortal_input, mortal_nonneg, mortal_depth_opt->count() > 0, mortal_depth,
                      limits, out);
  }
  if (reduce->parsed()) {
    return run_reduce(reduce_input, reduce_output, reduce_certificate, out);
  }
  if (prob->parsed()) {
    return run_simulate_prob(prob_device, prob_word, prob_state, out);
  }
  if (ports->parsed()) {
    limits.max_elements = ports_cap;
    return run_simulate_empty_ports(ports_device, ports_depth, limits, out);
  }
  if (cmop_decide->parsed()) {
    limits.max_elements = cmop_cap;
    return run_cmop(cmop_input, cmop_quantum, limits, out);
  }
  if (mps_search->parsed()) {
    limits.max_elements = mps_cap;
    return run_mps_search(mps_input, mps_depth, limits, out);
  }
  if (pcp_encode->parsed()) {
    return run_pcp_encode(pcp_encode_input, pcp_encode_output, out);
  }
  if (pcp_check->parsed()) {
    limits.max_elements = pcp_check_cap;
    return run_pcp_check(pcp_check_input, pcp_check_len, limits, out);
  }
  if (pcp_solve->parsed()) {
    limits.max_elements = pcp_solve_cap;
    return run_pcp_solve(pcp_solve_input, pcp_solve_len, limits, out);
  }
  throw Error(ErrorCode::bad_arguments, "no subcommand given; run with --help for usage");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const Error& e) {
    emit(err, json{{"error", json{{"code", error_code_name(e.code())}, {"message", e.what()}}}});
    return 1;
  } catch (const std::exception& e) {
    emit(err, json{{"error", json{{"code", error_code_name(ErrorCode::domain_error)},
                                  {"message", e.what()}}}});
    return 1;
  }
}

}  // namespace cli
}  // namespace qmo
