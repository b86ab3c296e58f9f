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
#include <string>
#include <vector>

#include "ecic/error.hpp"
#include "ecic/index_coding.hpp"
#include "ecic/linalg.hpp"
#include "ecic/matroid.hpp"
#include "ecic/subsets.hpp"

namespace ecic {

// g: messages and transmissions -> E(M).
struct GroundMap {
  std::vector<Label> message_labels;  // g(1..n)
  std::vector<Label> code_labels;     // g(c_1..c_N)
};

// A representable matroid together with the ground map and a basis
// B = g(messages) + {b_{n+1}, ..., b_{n+N}}. basis_tail is ordered: entry j
// is paired with transmission c_j.
struct Certificate {
  VectorMatroid matroid;
  GroundMap g;
  std::vector<Label> basis_tail;

  std::size_t messages() const noexcept { return g.message_labels.size(); }
  std::size_t length() const noexcept { return g.code_labels.size(); }

  LabelSet basis() const {
    std::vector<Label> b = g.message_labels;
    b.insert(b.end(), basis_tail.begin(), basis_tail.end());
    return make_label_set(std::move(b));
  }
};

struct ConditionResult {
  bool holds = true;
  std::string witness;
};

struct TransmissionCheck {
  bool outside_tail_closure = true;  // B1
  bool rank_balanced = true;         // B2
  std::size_t rank_with_both = 0;
  std::size_t rank_with_tail = 0;
  std::size_t rank_with_code = 0;
};

struct ConditionBResult {
  bool basis_valid = true;
  std::string basis_witness;
  std::vector<TransmissionCheck> transmissions;

  bool holds() const {
    return basis_valid &&
           std::all_of(transmissions.begin(), transmissions.end(),
                       [](const TransmissionCheck& t) {
                         return t.outside_tail_closure && t.rank_balanced;
                       });
  }

  // 0-based index of the first failing transmission, if any.
  std::optional<std::size_t> first_failure() const {
    for (std::size_t j = 0; j < transmissions.size(); ++j) {
      if (!transmissions[j].outside_tail_closure || !transmissions[j].rank_balanced) return j;
    }
    return std::nullopt;
  }
};

struct MatroidalReport {
  ConditionResult a;
  ConditionBResult b;
  // Evaluated only when A and B hold.
  std::optional<VerifierReport> c;

  bool overall() const { return a.holds && b.holds() && c && c->overall(); }
};

// Rejects certificates whose size or rank is not (n + 2N, n + N), or whose
// labels are not in E(M).
inline void check_shape(const Certificate& cert) {
  const std::size_t n = cert.messages();
  const std::size_t len = cert.length();
  const VectorMatroid& m = cert.matroid;
  auto malformed = [](const std::string& why) {
    throw Error(ErrorCode::kMalformedCertificate, why);
  };
  if (len == 0) malformed("certificate has no transmissions");
  if (m.size() != n + 2 * len) {
    malformed("ground set has " + std::to_string(m.size()) + " elements, expected n + 2N = " +
              std::to_string(n + 2 * len));
  }
  const std::size_t r = m.rank();
  if (r != n + len) {
    malformed("matroid rank is " + std::to_string(r) + ", expected n + N = " +
              std::to_string(n + len));
  }
  if (cert.basis_tail.size() != len) {
    malformed("basis tail has " + std::to_string(cert.basis_tail.size()) +
              " labels, expected N = " + std::to_string(len));
  }
  for (const auto* group : {&cert.g.message_labels, &cert.g.code_labels, &cert.basis_tail}) {
    for (Label l : *group) {
      if (!m.contains(l)) malformed("label " + std::to_string(l) + " not in E(M)");
    }
  }
  if (make_label_set(cert.basis_tail).size() != len) malformed("basis tail repeats a label");
}

// A: g is one-one on the messages and g(messages) is independent.
inline ConditionResult check_condition_a(const Certificate& cert) {
  const auto& msg = cert.g.message_labels;
  for (std::size_t i = 0; i < msg.size(); ++i) {
    for (std::size_t j = i + 1; j < msg.size(); ++j) {
      if (msg[i] == msg[j]) {
        return {false, "g not one-one: g(" + std::to_string(i + 1) + ") = g(" +
                           std::to_string(j + 1) + ") = " + std::to_string(msg[i])};
      }
    }
  }
  const std::size_t r = rank_of(cert.matroid, msg);
  if (r != msg.size()) {
    return {false, "g(messages) dependent: rank " + std::to_string(r) + " < " +
                       std::to_string(msg.size())};
  }
  return {};
}

// B: the stored B is a basis extending g(messages), and for each c_j
//   B1: g(c_j) is outside cl(B - g(messages)),
//   B2: r(g(msg) + b_{n+j} + g(c_j)) = r(g(msg) + b_{n+j}) = r(g(msg) + g(c_j)).
inline ConditionBResult check_condition_b(const Certificate& cert) {
  ConditionBResult out;
  const VectorMatroid& m = cert.matroid;
  const LabelSet basis = cert.basis();
  const LabelSet messages = make_label_set(cert.g.message_labels);
  const std::size_t target = cert.messages() + cert.length();
  if (basis.size() != target || !is_independent(m, basis) || rank_of(m, basis) != m.rank()) {
    out.basis_valid = false;
    out.basis_witness = "g(messages) + basis tail is not a basis of M";
    return out;
  }
  const LabelSet tail = make_label_set(cert.basis_tail);
  const LabelSet tail_closure = closure(m, tail);
  for (std::size_t j = 0; j < cert.length(); ++j) {
    TransmissionCheck t;
    const Label code = cert.g.code_labels[j];
    t.outside_tail_closure = !std::binary_search(tail_closure.begin(), tail_closure.end(), code);

    std::vector<Label> both = cert.g.message_labels;
    both.push_back(cert.basis_tail[j]);
    std::vector<Label> with_tail = both;
    both.push_back(code);
    std::vector<Label> with_code = cert.g.message_labels;
    with_code.push_back(code);
    t.rank_with_both = rank_of(m, both);
    t.rank_with_tail = rank_of(m, with_tail);
    t.rank_with_code = rank_of(m, with_code);
    t.rank_balanced = t.rank_with_both == t.rank_with_tail && t.rank_with_tail == t.rank_with_code;
    out.transmissions.push_back(t);
  }
  return out;
}

// C: for receiver i and each pattern F of size 2 delta_i, contract
// B - g(chi-bar_i) - {b_{n+j} : j in F} and require g(f(i)) to add no rank
// to g(c_1..c_N) in the contracted matroid.
inline VerifierReport check_condition_c(const Certificate& cert, const Problem& p,
                                        const ErrorProfile& d) {
  validate(p, d);
  if (cert.messages() != p.messages) {
    throw Error(ErrorCode::kDimensionMismatch,
                "certificate maps " + std::to_string(cert.messages()) +
                    " messages, problem has " + std::to_string(p.messages));
  }
  const std::size_t len = cert.length();
  const LabelSet basis = cert.basis();
  VerifierReport report;
  for (std::size_t i = 0; i < p.receivers(); ++i) {
    ReceiverVerdict verdict;
    const std::size_t delta = d.deltas[i];
    if (2 * delta > len) {
      verdict.verdict = Verdict::kInfeasible;
      report.receivers.push_back(verdict);
      continue;
    }
    const std::vector<std::size_t> free = p.unknown(i);
    std::vector<Label> free_labels;
    for (std::size_t j : free) free_labels.push_back(cert.g.message_labels[j]);
    const LabelSet base = set_difference(basis, make_label_set(free_labels));
    const Label demand_label = cert.g.message_labels[p.demand[i]];

    for_each_combination(len, 2 * delta, [&](const std::vector<std::size_t>& pattern) {
      std::vector<Label> spared;
      for (std::size_t j : pattern) spared.push_back(cert.basis_tail[j]);
      const LabelSet contracted_out = set_difference(base, make_label_set(spared));
      const VectorMatroid minor = contract(cert.matroid, contracted_out);

      if (minor.size() != free.size() + len + 2 * delta) {
        throw Error(ErrorCode::kMalformedCertificate,
                    "contracted matroid has " + std::to_string(minor.size()) +
                        " elements, expected " + std::to_string(free.size() + len + 2 * delta));
      }
      if (!minor.contains(demand_label)) {
        throw Error(ErrorCode::kMalformedCertificate,
                    "demand label " + std::to_string(demand_label) + " was contracted out");
      }
      for (Label l : cert.g.code_labels) {
        if (!minor.contains(l)) {
          throw Error(ErrorCode::kMalformedCertificate,
                      "code label " + std::to_string(l) + " was contracted out");
        }
      }
      std::vector<Label> code = cert.g.code_labels;
      const std::size_t without = rank_of(minor, code);
      code.push_back(demand_label);
      const std::size_t with = rank_of(minor, code);
      if (with != without) {
        verdict.verdict = Verdict::kFail;
        verdict.pattern_witness = PatternWitness{pattern, without, with};
        return false;
      }
      return true;
    });
    report.receivers.push_back(std::move(verdict));
  }
  return report;
}

// Full matroidal check against the basis stored in the certificate.
inline MatroidalReport check_matroidal(const Certificate& cert, const Problem& p,
                                       const ErrorProfile& d) {
  validate(p, d);
  check_shape(cert);
  MatroidalReport report;
  report.a = check_condition_a(cert);
  if (!report.a.holds) return report;
  report.b = check_condition_b(cert);
  if (!report.b.holds()) return report;
  report.c = check_condition_c(cert, p, d);
  return report;
}

inline constexpr std::size_t kMaxBasisSearchGroundSet = 14;

// Tries every ordered basis tail extending g(messages) instead of only the
// stored one. Returns the first tail (in label order) under which B and C
// hold, or nullopt.
inline std::optional<std::vector<Label>> find_matroidal_basis(const Certificate& cert,
                                                              const Problem& p,
                                                              const ErrorProfile& d) {
  validate(p, d);
  check_shape(cert);
  if (cert.matroid.size() > kMaxBasisSearchGroundSet) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "basis search limited to " + std::to_string(kMaxBasisSearchGroundSet) +
                    " elements");
  }
  if (!check_condition_a(cert).holds) return std::nullopt;

  const VectorMatroid& m = cert.matroid;
  const LabelSet messages = make_label_set(cert.g.message_labels);
  const LabelSet candidates = set_difference(m.ground_set(), messages);
  const std::size_t len = cert.length();
  std::vector<Label> tail;
  std::vector<bool> used(candidates.size(), false);
  std::optional<std::vector<Label>> found;

  auto extend = [&](auto&& self) -> void {
    if (found) return;
    const std::size_t j = tail.size();
    if (j == len) {
      Certificate trial{cert.matroid, cert.g, tail};
      if (!check_condition_b(trial).holds()) return;
      if (check_condition_c(trial, p, d).overall()) found = tail;
      return;
    }
    const Label code = cert.g.code_labels[j];
    for (std::size_t k = 0; k < candidates.size() && !found; ++k) {
      if (used[k]) continue;
      const Label b = candidates[k];
      std::vector<Label> partial = cert.g.message_labels;
      partial.insert(partial.end(), tail.begin(), tail.end());
      partial.push_back(b);
      if (rank_of(m, partial) != partial.size()) continue;
      std::vector<Label> with_tail = cert.g.message_labels;
      with_tail.push_back(b);
      std::vector<Label> with_code = cert.g.message_labels;
      with_code.push_back(code);
      std::vector<Label> with_both = with_tail;
      with_both.push_back(code);
      const std::size_t r = rank_of(m, with_tail);
      if (rank_of(m, with_code) != r || rank_of(m, with_both) != r) continue;
      used[k] = true;
      tail.push_back(b);
      self(self);
      tail.pop_back();
      used[k] = false;
    }
  };
  extend(extend);
  return found;
}

// Forward construction: Y = [I_{n+N} | (L ; I_N)] on labels 1..n+2N with
// g(i) = i, g(c_j) = n + N + j and basis tail b_{n+j} = n + j.
inline Certificate code_to_certificate(const Problem& p, const IndexCode& c) {
  if (!(c.matrix.field() == p.field) || c.matrix.rows() != p.messages) {
    throw Error(ErrorCode::kDimensionMismatch, "code does not match the problem");
  }
  if (const auto zero = c.first_zero_column()) {
    throw Error(ErrorCode::kZeroColumn,
                "transmission c" + std::to_string(*zero + 1) +
                    " is identically zero, so condition B1 cannot hold");
  }
  const std::size_t n = p.messages;
  const std::size_t len = c.length();
  const FieldMatrix zeta = c.matrix.vstack(FieldMatrix::identity(p.field, len));
  const FieldMatrix y = FieldMatrix::identity(p.field, n + len).hstack(zeta);

  GroundMap g;
  for (std::size_t i = 0; i < n; ++i) g.message_labels.push_back(static_cast<Label>(i + 1));
  for (std::size_t j = 0; j < len; ++j) g.code_labels.push_back(static_cast<Label>(n + len + j + 1));
  std::vector<Label> tail;
  for (std::size_t j = 0; j < len; ++j) tail.push_back(static_cast<Label>(n + j + 1));
  return Certificate{VectorMatroid(y), std::move(g), std::move(tail)};
}

// Backward extraction. The representation is brought to coordinates relative
// to the ordered basis (g(1..n), b_{n+1..n+N}); B2 then forces
// g(c_j) = sum_i a_ij g(i) + d_j b_{n+j} with d_j != 0, and the code is
// L_ij = a_ij / d_j, i.e. g(c_j) rescaled so its tail coordinate is 1.
inline IndexCode certificate_to_code(const Certificate& cert) {
  check_shape(cert);
  const ConditionResult a = check_condition_a(cert);
  if (!a.holds) throw Error(ErrorCode::kPreconditionViolated, "condition A fails: " + a.witness);
  const ConditionBResult b = check_condition_b(cert);
  if (!b.holds()) {
    std::string why = b.basis_witness;
    if (const auto j = b.first_failure()) {
      why = "transmission c" + std::to_string(*j + 1) +
            (b.transmissions[*j].outside_tail_closure ? " fails B2" : " fails B1");
    }
    throw Error(ErrorCode::kPreconditionViolated, "condition B fails: " + why);
  }

  const std::size_t n = cert.messages();
  const std::size_t len = cert.length();
  std::vector<Label> order = cert.g.message_labels;
  order.insert(order.end(), cert.basis_tail.begin(), cert.basis_tail.end());
  order.insert(order.end(), cert.g.code_labels.begin(), cert.g.code_labels.end());
  const RrefResult reduced = rref(cert.matroid.submatrix(order));
  for (std::size_t k = 0; k < n + len; ++k) {
    if (k >= reduced.pivot_cols.size() || reduced.pivot_cols[k] != k) {
      throw Error(ErrorCode::kMalformedCertificate, "basis columns are not independent");
    }
  }

  const PrimeField& f = cert.matroid.field();
  FieldMatrix code(f, n, len);
  for (std::size_t j = 0; j < len; ++j) {
    const std::size_t col = n + len + j;
    const Elem dj = reduced.reduced(n + j, col);
    if (dj == 0) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "transmission c" + std::to_string(j + 1) + " has no basis-tail component");
    }
    const Elem dj_inv = f.inv(dj);
    for (std::size_t i = 0; i < n; ++i) code.set(i, j, f.mul(reduced.reduced(i, col), dj_inv));
  }
  return IndexCode{std::move(code)};
}

struct EquivalenceResult {
  bool weight_pass = false;
  bool rank_pass = false;
  // nullopt when the code has a zero column and no certificate exists.
  std::optional<bool> matroid_pass;

  bool agree() const {
    if (weight_pass != rank_pass) return false;
    return !matroid_pass || *matroid_pass == weight_pass;
  }
};

// Runs the weight criterion, the span criterion and the matroidal check on
// the forward certificate. A code with a zero column has no certificate;
// only the two code-level oracles are compared for it.
inline EquivalenceResult equivalence_harness(const Problem& p, const ErrorProfile& d,
                                             const IndexCode& c) {
  EquivalenceResult out;
  out.weight_pass = verify_weight(p, d, c).overall();
  out.rank_pass = verify_rank(p, d, c).overall();
  if (!c.first_zero_column()) {
    out.matroid_pass = check_matroidal(code_to_certificate(p, c), p, d).overall();
  }
  return out;
}

}  // namespace ecic
