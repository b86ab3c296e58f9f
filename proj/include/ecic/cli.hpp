// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecic/bridge.hpp"
#include "ecic/io.hpp"
#include "ecic/report.hpp"
#include "ecic/search.hpp"
#include "ecic/simulate.hpp"

namespace ecic::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

struct Options {
  std::string instance;
  std::string certificate;
  std::string output;
  std::string directory;
  std::string oracle = "all";
  std::string mode = "exhaustive";
  std::size_t nmin = 1;
  std::size_t nmax = 8;
  std::uint64_t budget = 10'000;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
};

inline const Instance& require_code(const Instance& inst) {
  if (!inst.code) throw Error(ErrorCode::kParse, "field 'code': missing; this command needs a code");
  return inst;
}

inline int cmd_verify(const Options& opt, std::ostream& out) {
  const Instance inst = load_instance(opt.instance);
  require_code(inst);
  const Problem& p = inst.problem;
  const ErrorProfile& d = inst.profile;
  const IndexCode& code = *inst.code;
  const bool all = opt.oracle == "all";
  std::vector<bool> verdicts;

  if (all || opt.oracle == "weight") {
    const VerifierReport r = verify_weight(p, d, code);
    render_verifier_report(out, "weight", r, d, code.length());
    verdicts.push_back(r.overall());
  }
  if (all || opt.oracle == "rank") {
    const VerifierReport r = verify_rank(p, d, code);
    render_verifier_report(out, "rank", r, d, code.length());
    verdicts.push_back(r.overall());
  }
  if (all || opt.oracle == "matroid") {
    try {
      const MatroidalReport r = check_matroidal(code_to_certificate(p, code), p, d);
      render_matroidal_report(out, r, d, code.length());
      verdicts.push_back(r.overall());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kZeroColumn) throw;
      out << "oracle matroid: rejected (" << e.what() << ")\n";
      if (!all) verdicts.push_back(false);
    }
  }
  const bool pass = std::all_of(verdicts.begin(), verdicts.end(), [](bool v) { return v; });
  if (all) {
    const bool agree = std::all_of(verdicts.begin(), verdicts.end(),
                                   [&](bool v) { return v == verdicts.front(); });
    out << "agreement: " << (agree ? "yes" : "NO") << "\n";
  }
  out << "result: " << (pass ? "pass" : "fail") << "\n";
  return pass ? kPass : kFail;
}

inline int cmd_to_matroid(const Options& opt, std::ostream& out) {
  const Instance inst = load_instance(opt.instance);
  require_code(inst);
  Certificate cert = [&] {
    try {
      return code_to_certificate(inst.problem, *inst.code);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kZeroColumn) throw;
      out << "rejected: " << e.what() << "\n";
      throw;
    }
  }();
  std::ofstream file(opt.output);
  if (!file) throw Error(ErrorCode::kParse, "cannot write " + opt.output);
  file << certificate_to_json(cert);
  out << "wrote certificate: " << cert.matroid.representation().rows() << "x"
      << cert.matroid.size() << " representation, " << cert.messages() << " messages, "
      << cert.length() << " transmissions\n";
  return kPass;
}

inline int cmd_from_matroid(const Options& opt, std::ostream& out) {
  const Certificate cert = load_certificate(opt.certificate);
  const Instance inst = load_instance(opt.instance);
  const Problem& p = inst.problem;
  const ErrorProfile& d = inst.profile;
  if (cert.messages() != p.messages) {
    throw Error(ErrorCode::kMalformedCertificate,
                "certificate maps " + std::to_string(cert.messages()) +
                    " messages, instance has n = " + std::to_string(p.messages));
  }
  check_shape(cert);
  IndexCode code = [&] {
    try {
      return certificate_to_code(cert);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPreconditionViolated) throw;
      out << "extraction failed: " << e.what() << "\n";
      throw;
    }
  }();
  out << "extracted code (" << code.matrix.rows() << "x" << code.length() << "):\n"
      << code.matrix;
  const VerifierReport w = verify_weight(p, d, code);
  render_verifier_report(out, "weight", w, d, code.length());
  const VerifierReport r = verify_rank(p, d, code);
  render_verifier_report(out, "rank", r, d, code.length());
  const MatroidalReport m = check_matroidal(cert, p, d);
  render_matroidal_report(out, m, d, code.length());
  const bool pass = w.overall() && r.overall() && m.overall();
  out << "result: " << (pass ? "pass" : "fail") << "\n";
  return pass ? kPass : kFail;
}

inline int cmd_search(const Options& opt, std::ostream& out) {
  const Instance inst = load_instance(opt.instance);
  SearchSpec spec{inst.problem, inst.profile};
  spec.min_length = opt.nmin;
  spec.max_length = opt.nmax;
  spec.mode = opt.mode == "random" ? SearchMode::kRandom : SearchMode::kExhaustive;
  spec.budget = opt.budget;
  spec.seed = opt.seed;
  const SearchResult result = search(spec);
  render_search_result(out, spec, result);
  return result.code ? kPass : kFail;
}

inline int cmd_simulate(const Options& opt, std::ostream& out) {
  const Instance inst = load_instance(opt.instance);
  require_code(inst);
  const SimulationReport r = simulate(inst.problem, inst.profile, *inst.code, opt.trials, opt.seed);
  render_simulation(out, r, opt.seed);
  return kPass;
}

inline int cmd_equiv_check(const Options& opt, std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(opt.directory)) {
    throw Error(ErrorCode::kParse, opt.directory + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opt.directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  auto word = [](bool v) { return v ? "pass" : "fail"; };
  std::size_t checked = 0;
  std::size_t agreed = 0;
  for (const fs::path& path : files) {
    const std::string text = read_file(path.string());
    if (text.find("\"representation\"") != std::string::npos) continue;  // certificates
    const Instance inst = parse_instance(text);
    out << path.filename().string() << ": ";
    if (!inst.code) {
      out << "skipped (no code)\n";
      continue;
    }
    const EquivalenceResult r = equivalence_harness(inst.problem, inst.profile, *inst.code);
    out << "weight=" << word(r.weight_pass) << " rank=" << word(r.rank_pass) << " matroid="
        << (r.matroid_pass ? word(*r.matroid_pass) : "rejected") << " "
        << (r.agree() ? "agree" : "DISAGREE") << "\n";
    ++checked;
    agreed += r.agree();
  }
  out << agreed << "/" << checked << " instances agree\n";
  return agreed == checked ? kPass : kFail;
}

// Entry point shared by the binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential error-correcting index codes: verification, matroid certificates, "
               "search and simulation"};
  app.require_subcommand(1);
  Options opt;

  auto* verify = app.add_subcommand("verify", "Check the instance's code with one or all oracles");
  verify->add_option("instance", opt.instance, "Instance file")->required();
  verify->add_option("--oracle", opt.oracle, "weight | rank | matroid | all")
      ->check(CLI::IsMember({"weight", "rank", "matroid", "all"}));

  auto* to_matroid = app.add_subcommand("to-matroid", "Write the matroid certificate of a code");
  to_matroid->add_option("instance", opt.instance, "Instance file")->required();
  to_matroid->add_option("output", opt.output, "Certificate file to write")->required();

  auto* from_matroid =
      app.add_subcommand("from-matroid", "Extract a code from a certificate and verify it");
  from_matroid->add_option("certificate", opt.certificate, "Certificate file")->required();
  from_matroid->add_option("instance", opt.instance, "Instance file (problem and deltas)")
      ->required();

  auto* search_cmd = app.add_subcommand("search", "Search for a shortest code");
  search_cmd->add_option("instance", opt.instance, "Instance file")->required();
  search_cmd->add_option("--mode", opt.mode, "exhaustive | random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  search_cmd->add_option("--nmin", opt.nmin, "Smallest length to try");
  search_cmd->add_option("--nmax", opt.nmax, "Largest length to try");
  search_cmd->add_option("--budget", opt.budget, "Random draws per length");
  search_cmd->add_option("--seed", opt.seed, "Random seed");

  auto* simulate_cmd = app.add_subcommand("simulate", "Decode under random injected errors");
  simulate_cmd->add_option("instance", opt.instance, "Instance file")->required();
  simulate_cmd->add_option("--trials", opt.trials, "Number of trials");
  simulate_cmd->add_option("--seed", opt.seed, "Random seed");

  auto* equiv = app.add_subcommand("equiv-check", "Cross-check all oracles on a fixture directory");
  equiv->add_option("directory", opt.directory, "Directory of instance files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, out);
    if (to_matroid->parsed()) return cmd_to_matroid(opt, out);
    if (from_matroid->parsed()) return cmd_from_matroid(opt, out);
    if (search_cmd->parsed()) return cmd_search(opt, out);
    if (simulate_cmd->parsed()) return cmd_simulate(opt, out);
    if (equiv->parsed()) return cmd_equiv_check(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kZeroColumn:
      case ErrorCode::kPreconditionViolated:
        return kFail;
      default:
        return kUsage;
    }
  }
  return kUsage;
}

}  // namespace ecic::cli
