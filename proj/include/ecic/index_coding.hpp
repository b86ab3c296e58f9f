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
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ecic/error.hpp"
#include "ecic/field.hpp"
#include "ecic/linalg.hpp"
#include "ecic/subsets.hpp"

namespace ecic {

// An index coding instance (m, n, chi, f). Message, receiver and
// transmission indices are 0-based in memory; files and reports print them
// 1-based.
struct Problem {
  PrimeField field;
  std::size_t messages = 0;                         // n
  std::vector<std::vector<std::size_t>> side_info;  // chi_i, one per receiver
  std::vector<std::size_t> demand;                  // f(i), one per receiver

  std::size_t receivers() const noexcept { return demand.size(); }

  std::vector<std::size_t> known(std::size_t receiver) const {
    std::vector<std::size_t> s = side_info.at(receiver);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  // chi-bar_i: messages receiver i does not have, increasing.
  std::vector<std::size_t> unknown(std::size_t receiver) const {
    const std::vector<std::size_t> have = known(receiver);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < messages; ++j) {
      if (!std::binary_search(have.begin(), have.end(), j)) out.push_back(j);
    }
    return out;
  }
};

// Per-receiver error demand delta_i; zero means no correction is asked for.
struct ErrorProfile {
  std::vector<std::size_t> deltas;

  static ErrorProfile uniform(std::size_t receivers, std::size_t delta) {
    return {std::vector<std::size_t>(receivers, delta)};
  }
};

// Linear index code x -> xL with L an n x N matrix.
struct IndexCode {
  FieldMatrix matrix;

  std::size_t length() const noexcept { return matrix.cols(); }

  std::optional<std::size_t> first_zero_column() const {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (matrix.column_is_zero(c)) return c;
    }
    return std::nullopt;
  }
};

// Support of an error vector: increasing 0-based transmission indices.
using ErrorPattern = std::vector<std::size_t>;

enum class Verdict { kPass, kFail, kInfeasible };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kInfeasible: return "infeasible";
  }
  return "?";
}

// A nonzero-demand z whose codeword zL is too light.
struct WeightWitness {
  FieldVector z;
  std::size_t weight;
  std::size_t required;
};

// An error pattern under which the demand column falls outside the span.
struct PatternWitness {
  ErrorPattern pattern;
  std::size_t rank_without;
  std::size_t rank_with;
};

struct ReceiverVerdict {
  Verdict verdict = Verdict::kPass;
  std::optional<WeightWitness> weight_witness;
  std::optional<PatternWitness> pattern_witness;

  bool passed() const noexcept { return verdict == Verdict::kPass; }
};

struct VerifierReport {
  std::vector<ReceiverVerdict> receivers;

  bool overall() const {
    return std::all_of(receivers.begin(), receivers.end(),
                       [](const ReceiverVerdict& r) { return r.passed(); });
  }

  std::size_t pass_count() const {
    return static_cast<std::size_t>(
        std::count_if(receivers.begin(), receivers.end(),
                      [](const ReceiverVerdict& r) { return r.passed(); }));
  }
};

inline void validate(const Problem& p) {
  if (p.side_info.size() != p.demand.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(p.side_info.size()) + " side-information sets for " +
                    std::to_string(p.demand.size()) + " demands");
  }
  if (p.messages == 0) {
    throw Error(ErrorCode::kInvalidArgument, "problem has no messages");
  }
  for (std::size_t i = 0; i < p.receivers(); ++i) {
    const std::string who = "receiver R" + std::to_string(i + 1);
    if (p.demand[i] >= p.messages) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  who + " demands message " + std::to_string(p.demand[i] + 1) +
                      " but n = " + std::to_string(p.messages));
    }
    for (std::size_t j : p.side_info[i]) {
      if (j >= p.messages) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    who + " has side information " + std::to_string(j + 1) +
                        " but n = " + std::to_string(p.messages));
      }
      if (j == p.demand[i]) {
        throw Error(ErrorCode::kDemandInSideInfo,
                    who + " already knows its demand x" + std::to_string(j + 1));
      }
    }
  }
}

inline void validate(const Problem& p, const ErrorProfile& d) {
  validate(p);
  if (d.deltas.size() != p.receivers()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "error profile has " + std::to_string(d.deltas.size()) +
                    " entries for " + std::to_string(p.receivers()) + " receivers");
  }
}

inline void validate(const Problem& p, const ErrorProfile& d, const IndexCode& c) {
  validate(p, d);
  if (!(c.matrix.field() == p.field)) {
    throw Error(ErrorCode::kInvalidArgument, "code and problem use different fields");
  }
  if (c.matrix.rows() != p.messages) {
    throw Error(ErrorCode::kDimensionMismatch,
                "code matrix has " + std::to_string(c.matrix.rows()) +
                    " rows, expected n = " + std::to_string(p.messages));
  }
  if (c.length() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "code has length 0");
  }
}

namespace detail {

inline bool profile_feasible(std::size_t delta, std::size_t length) {
  return 2 * delta <= length;
}

inline ReceiverVerdict verify_weight_at(const Problem& p, std::size_t delta,
                                        const IndexCode& c, std::size_t i) {
  ReceiverVerdict out;
  if (!profile_feasible(delta, c.length())) {
    out.verdict = Verdict::kInfeasible;
    return out;
  }
  const std::vector<std::size_t> free = p.unknown(i);
  const auto demand_pos = static_cast<std::size_t>(
      std::find(free.begin(), free.end(), p.demand[i]) - free.begin());
  const std::size_t required = 2 * delta + 1;
  FieldVector z(p.field, p.messages);
  for_each_assignment(free.size(), p.field.modulus(), [&](const std::vector<int>& digits) {
    if (digits[demand_pos] == 0) return true;
    for (std::size_t k = 0; k < free.size(); ++k) z.set(free[k], digits[k]);
    const std::size_t w = weight(vec_mat_mul(z, c.matrix));
    if (w < required) {
      out.verdict = Verdict::kFail;
      out.weight_witness = WeightWitness{z, w, required};
      return false;
    }
    return true;
  });
  return out;
}

// [L restricted to rows `free` ; rows of I_N indexed by pattern]
inline FieldMatrix stacked_decoding_matrix(const FieldMatrix& code,
                                           std::span<const std::size_t> free,
                                           std::span<const std::size_t> pattern) {
  FieldMatrix m(code.field(), free.size() + pattern.size(), code.cols());
  for (std::size_t r = 0; r < free.size(); ++r) {
    for (std::size_t c = 0; c < code.cols(); ++c) m.set(r, c, code(free[r], c));
  }
  for (std::size_t k = 0; k < pattern.size(); ++k) m.set(free.size() + k, pattern[k], 1);
  return m;
}

inline ReceiverVerdict verify_rank_at(const Problem& p, std::size_t delta,
                                      const IndexCode& c, std::size_t i) {
  ReceiverVerdict out;
  if (!profile_feasible(delta, c.length())) {
    out.verdict = Verdict::kInfeasible;
    return out;
  }
  const std::vector<std::size_t> free = p.unknown(i);
  const auto demand_pos = static_cast<std::size_t>(
      std::find(free.begin(), free.end(), p.demand[i]) - free.begin());
  FieldVector target(p.field, free.size() + 2 * delta);
  target.set(demand_pos, 1);
  for_each_combination(c.length(), 2 * delta, [&](const std::vector<std::size_t>& pattern) {
    const FieldMatrix stacked = stacked_decoding_matrix(c.matrix, free, pattern);
    const std::size_t without = rank(stacked);
    const std::size_t with = rank(stacked.hstack(as_column(target)));
    if (with != without) {
      out.verdict = Verdict::kFail;
      out.pattern_witness = PatternWitness{pattern, without, with};
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace detail

// Weight criterion: every z with z on chi_i zero and z_f(i) nonzero must give
// wt(zL) >= 2 delta_i + 1. Only coordinates outside chi_i are enumerated.
// The witness is the first violating z in lexicographic order.
inline VerifierReport verify_weight(const Problem& p, const ErrorProfile& d,
                                    const IndexCode& c) {
  validate(p, d, c);
  VerifierReport report;
  for (std::size_t i = 0; i < p.receivers(); ++i) {
    report.receivers.push_back(detail::verify_weight_at(p, d.deltas[i], c, i));
  }
  return report;
}

// Span criterion: for every error pattern F of size 2 delta_i the unit vector
// at f(i) lies in the column span of [L_{chi-bar_i} ; I_F]. The witness is
// the first violating pattern in lexicographic order.
inline VerifierReport verify_rank(const Problem& p, const ErrorProfile& d,
                                  const IndexCode& c) {
  validate(p, d, c);
  VerifierReport report;
  for (std::size_t i = 0; i < p.receivers(); ++i) {
    report.receivers.push_back(detail::verify_rank_at(p, d.deltas[i], c, i));
  }
  return report;
}

// Brute-force decoder for receiver i: returns x_f(i) if every message vector
// consistent with the side information and within Hamming distance
// max_errors of `received` agrees on it; nullopt when ambiguous or when no
// candidate is within range. side_values follow chi_i in increasing order.
inline std::optional<Elem> decode(const Problem& p, std::size_t receiver,
                                  const IndexCode& c, const FieldVector& received,
                                  std::span<const Elem> side_values,
                                  std::size_t max_errors) {
  if (receiver >= p.receivers()) {
    throw Error(ErrorCode::kIndexOutOfRange, "no receiver R" + std::to_string(receiver + 1));
  }
  if (c.matrix.rows() != p.messages) {
    throw Error(ErrorCode::kDimensionMismatch, "code rows differ from message count");
  }
  if (received.size() != c.length()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "received word has length " + std::to_string(received.size()) +
                    ", code length is " + std::to_string(c.length()));
  }
  const std::vector<std::size_t> have = p.known(receiver);
  if (side_values.size() != have.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "receiver R" + std::to_string(receiver + 1) + " needs " +
                    std::to_string(have.size()) + " side values, got " +
                    std::to_string(side_values.size()));
  }
  const std::vector<std::size_t> free = p.unknown(receiver);
  const PrimeField& f = p.field;

  FieldVector x(f, p.messages);
  for (std::size_t k = 0; k < have.size(); ++k) x.set(have[k], side_values[k]);

  std::optional<Elem> value;
  bool ambiguous = false;
  for_each_assignment(free.size(), f.modulus(), [&](const std::vector<int>& digits) {
    for (std::size_t k = 0; k < free.size(); ++k) x.set(free[k], digits[k]);
    const FieldVector codeword = vec_mat_mul(x, c.matrix);
    std::size_t distance = 0;
    for (std::size_t t = 0; t < codeword.size(); ++t) distance += codeword[t] != received[t];
    if (distance > max_errors) return true;
    const Elem v = x[p.demand[receiver]];
    if (value && *value != v) {
      ambiguous = true;
      return false;
    }
    value = v;
    return true;
  });
  if (ambiguous) return std::nullopt;
  return value;
}

}  // namespace ecic
