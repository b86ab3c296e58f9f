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
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ecic/error.hpp"
#include "ecic/index_coding.hpp"
#include "ecic/subsets.hpp"

namespace ecic {

enum class SearchMode { kExhaustive, kRandom };

inline constexpr std::uint64_t kDefaultCandidateCeiling = 5'000'000;

struct SearchSpec {
  Problem problem;
  ErrorProfile profile;
  std::size_t min_length = 1;
  std::size_t max_length = 1;
  SearchMode mode = SearchMode::kExhaustive;
  std::uint64_t budget = 10'000;  // random draws per length
  std::uint64_t seed = 0;
  std::uint64_t candidate_ceiling = kDefaultCandidateCeiling;
};

enum class LengthStatus {
  kRefutedByBound,  // below max_i (2 delta_i + 1)
  kRefuted,         // every canonical candidate fails
  kFound,
  kUnresolved,      // random budget spent, or too many candidates to enumerate
};

struct LengthOutcome {
  std::size_t length = 0;
  LengthStatus status = LengthStatus::kUnresolved;
  std::uint64_t candidates = 0;
};

struct SearchResult {
  std::optional<IndexCode> code;
  std::vector<LengthOutcome> lengths;
  std::uint64_t candidates_tested = 0;
};

// Every receiver has some admissible z, and wt(zL) <= N, so N >= 2 delta_i + 1.
inline std::size_t length_floor(const ErrorProfile& d) {
  std::size_t floor = 1;
  for (std::size_t delta : d.deltas) floor = std::max(floor, 2 * delta + 1);
  return floor;
}

// Nonzero vectors of F_q^n whose first nonzero entry is 1, in lexicographic
// order. One representative per column up to nonzero scaling.
inline std::vector<std::vector<Elem>> canonical_columns(const PrimeField& f, std::size_t n) {
  std::vector<std::vector<Elem>> out;
  for_each_assignment(n, f.modulus(), [&](const std::vector<int>& digits) {
    const auto first = std::find_if(digits.begin(), digits.end(), [](int v) { return v != 0; });
    if (first != digits.end() && *first == 1) out.emplace_back(digits.begin(), digits.end());
    return true;
  });
  return out;
}

// Multisets of N canonical columns.
inline std::uint64_t canonical_candidate_count(const PrimeField& f, std::size_t n,
                                               std::size_t length) {
  std::uint64_t q_pow = 1;
  for (std::size_t i = 0; i < n; ++i) q_pow *= static_cast<std::uint64_t>(f.modulus());
  const std::uint64_t points = (q_pow - 1) / static_cast<std::uint64_t>(f.modulus() - 1);
  return binomial(points + length - 1, length);
}

// Visits the canonical n x N candidates: columns drawn from
// canonical_columns() with nondecreasing index, so each class under column
// scaling and permutation is visited once. Zero columns are skipped; a code
// with a zero column passes only if a shorter zero-free code does, and that
// code padded with a repeated column passes too. Stops when visit returns
// false.
template <typename Visitor>
bool for_each_canonical_code(const PrimeField& f, std::size_t n, std::size_t length,
                             Visitor&& visit) {
  const std::vector<std::vector<Elem>> columns = canonical_columns(f, n);
  if (columns.empty() || length == 0) return true;
  std::vector<std::size_t> pick(length, 0);
  FieldMatrix m(f, n, length);
  while (true) {
    for (std::size_t c = 0; c < length; ++c) {
      for (std::size_t r = 0; r < n; ++r) m.set(r, c, columns[pick[c]][r]);
    }
    if (!visit(static_cast<const FieldMatrix&>(m))) return false;
    std::size_t i = length;
    while (i > 0 && pick[i - 1] == columns.size() - 1) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t k = i; k < length; ++k) pick[k] = pick[i - 1];
  }
}

inline bool passes(const Problem& p, const ErrorProfile& d, const FieldMatrix& m) {
  return verify_weight(p, d, IndexCode{m}).overall();
}

// True iff no n x N code passes the weight criterion.
inline bool refute_length(const Problem& p, const ErrorProfile& d, std::size_t length,
                          std::uint64_t candidate_ceiling = kDefaultCandidateCeiling) {
  validate(p, d);
  if (length == 0) return true;
  const std::uint64_t count = canonical_candidate_count(p.field, p.messages, length);
  if (count > candidate_ceiling) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                std::to_string(count) + " canonical candidates exceed the ceiling of " +
                    std::to_string(candidate_ceiling));
  }
  return for_each_canonical_code(p.field, p.messages, length,
                                 [&](const FieldMatrix& m) { return !passes(p, d, m); });
}

// Shortest-length search from min_length to max_length. Exhaustive mode
// returns the first canonical candidate at the first length that has one,
// and marks the shorter lengths refuted. Random mode draws `budget` uniform
// matrices per length; a miss there refutes nothing.
inline SearchResult search(const SearchSpec& spec) {
  const Problem& p = spec.problem;
  const ErrorProfile& d = spec.profile;
  validate(p, d);
  SearchResult result;
  const std::size_t floor = length_floor(d);
  const std::size_t start = std::max<std::size_t>(spec.min_length, 1);

  for (std::size_t len = start; len <= spec.max_length && !result.code; ++len) {
    LengthOutcome outcome;
    outcome.length = len;
    if (len < floor) {
      outcome.status = LengthStatus::kRefutedByBound;
      result.lengths.push_back(outcome);
      continue;
    }
    if (spec.mode == SearchMode::kExhaustive) {
      if (canonical_candidate_count(p.field, p.messages, len) > spec.candidate_ceiling) {
        outcome.status = LengthStatus::kUnresolved;
        result.lengths.push_back(outcome);
        break;
      }
      outcome.status = LengthStatus::kRefuted;
      for_each_canonical_code(p.field, p.messages, len, [&](const FieldMatrix& m) {
        ++outcome.candidates;
        if (passes(p, d, m)) {
          result.code = IndexCode{m};
          outcome.status = LengthStatus::kFound;
          return false;
        }
        return true;
      });
    } else {
      outcome.status = LengthStatus::kUnresolved;
      std::mt19937_64 rng(spec.seed ^ (0x9e3779b97f4a7c15ULL * (len + 1)));
      std::uniform_int_distribution<int> symbol(0, p.field.modulus() - 1);
      FieldMatrix m(p.field, p.messages, len);
      for (std::uint64_t draw = 0; draw < spec.budget; ++draw) {
        for (std::size_t r = 0; r < p.messages; ++r) {
          for (std::size_t c = 0; c < len; ++c) m.set(r, c, symbol(rng));
        }
        ++outcome.candidates;
        if (passes(p, d, m)) {
          result.code = IndexCode{m};
          outcome.status = LengthStatus::kFound;
          break;
        }
      }
    }
    result.candidates_tested += outcome.candidates;
    result.lengths.push_back(outcome);
  }
  return result;
}

}  // namespace ecic
