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

#include <cstdio>
#include <ostream>
#include <string>

#include "ecic/bridge.hpp"
#include "ecic/index_coding.hpp"
#include "ecic/search.hpp"
#include "ecic/simulate.hpp"

// Plain-text reports. Indices are printed 1-based.
namespace ecic {

inline std::string format_pattern(const ErrorPattern& pattern) {
  std::string s = "{";
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(pattern[k] + 1);
  }
  return s + "}";
}

inline void render_receivers(std::ostream& os, const VerifierReport& report,
                             const ErrorProfile& d, std::size_t length) {
  for (std::size_t i = 0; i < report.receivers.size(); ++i) {
    const ReceiverVerdict& r = report.receivers[i];
    const std::string who = "R" + std::to_string(i + 1);
    switch (r.verdict) {
      case Verdict::kPass:
        os << "  pass " << who << " (delta=" << d.deltas[i] << ")\n";
        break;
      case Verdict::kInfeasible:
        os << "  infeasible " << who << ": 2*delta=" << 2 * d.deltas[i] << " exceeds N=" << length
           << "\n";
        break;
      case Verdict::kFail:
        os << "  fail " << who << ":";
        if (r.weight_witness) {
          os << " z=" << r.weight_witness->z << " wt=" << r.weight_witness->weight << " < "
             << r.weight_witness->required;
        }
        if (r.pattern_witness) {
          os << " pattern " << format_pattern(r.pattern_witness->pattern) << " rank "
             << r.pattern_witness->rank_without << " -> " << r.pattern_witness->rank_with;
        }
        os << "\n";
        break;
    }
  }
}

inline void render_verifier_report(std::ostream& os, const std::string& oracle,
                                   const VerifierReport& report, const ErrorProfile& d,
                                   std::size_t length) {
  os << "oracle " << oracle << ": " << report.pass_count() << "/" << report.receivers.size()
     << " receivers pass\n";
  render_receivers(os, report, d, length);
}

inline void render_matroidal_report(std::ostream& os, const MatroidalReport& report,
                                    const ErrorProfile& d, std::size_t length) {
  if (!report.a.holds) {
    os << "oracle matroid: fail\n  condition A: " << report.a.witness << "\n";
    return;
  }
  if (!report.b.holds()) {
    os << "oracle matroid: fail\n  condition A: holds\n  condition B: ";
    if (!report.b.basis_valid) {
      os << report.b.basis_witness << "\n";
    } else {
      const std::size_t j = *report.b.first_failure();
      const TransmissionCheck& t = report.b.transmissions[j];
      if (!t.outside_tail_closure) {
        os << "B1 fails at c" << j + 1 << " (g(c" << j + 1 << ") lies in cl(B - g(messages)))\n";
      } else {
        os << "B2 fails at c" << j + 1 << " (ranks " << t.rank_with_both << ", "
           << t.rank_with_tail << ", " << t.rank_with_code << ")\n";
      }
    }
    return;
  }
  const VerifierReport& c = *report.c;
  os << "oracle matroid: " << c.pass_count() << "/" << c.receivers.size()
     << " receivers pass\n  condition A: holds\n  condition B: holds\n";
  render_receivers(os, c, d, length);
}

inline const char* to_string(LengthStatus s) {
  switch (s) {
    case LengthStatus::kRefutedByBound: return "refuted (weight bound)";
    case LengthStatus::kRefuted: return "refuted";
    case LengthStatus::kFound: return "found";
    case LengthStatus::kUnresolved: return "unresolved";
  }
  return "?";
}

inline void render_search_result(std::ostream& os, const SearchSpec& spec,
                                 const SearchResult& result) {
  os << "search " << (spec.mode == SearchMode::kExhaustive ? "exhaustive" : "random")
     << " N=" << spec.min_length << ".." << spec.max_length << "\n";
  std::string summary;
  for (const LengthOutcome& o : result.lengths) {
    os << "N=" << o.length << " " << to_string(o.status);
    if (o.status != LengthStatus::kRefutedByBound) os << " (" << o.candidates << " candidates)";
    os << "\n";
    if (!summary.empty()) summary += "; ";
    summary += "N=" + std::to_string(o.length) + " " +
               (o.status == LengthStatus::kRefutedByBound ? std::string("refuted")
                                                          : std::string(to_string(o.status)));
  }
  os << "summary: " << summary << "\n";
  os << "candidates tested: " << result.candidates_tested << "\n";
  if (result.code) {
    os << "code (" << result.code->matrix.rows() << "x" << result.code->length() << "):\n"
       << result.code->matrix;
  } else if (spec.mode == SearchMode::kRandom) {
    os << "no code found <= N_max (not a refutation)\n";
  } else {
    os << "no code found <= N_max\n";
  }
}

inline void render_simulation(std::ostream& os, const SimulationReport& report,
                              std::uint64_t seed) {
  os << "simulate trials=" << report.trials << " seed=" << seed << "\n";
  if (report.trials == 0) return;
  char rate[32];
  for (std::size_t i = 0; i < report.successes.size(); ++i) {
    std::snprintf(rate, sizeof rate, "%.6f", report.rate(i));
    os << "R" << i + 1 << ": " << report.successes[i] << "/" << report.trials << " (" << rate
       << ")\n";
  }
}

}  // namespace ecic
