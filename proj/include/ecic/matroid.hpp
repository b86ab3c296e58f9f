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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecic/error.hpp"
#include "ecic/field.hpp"
#include "ecic/linalg.hpp"

namespace ecic {

// Ground-set elements are opaque integers that survive contraction.
using Label = int;

// A subset of the ground set, sorted and duplicate-free.
using LabelSet = std::vector<Label>;

inline LabelSet make_label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

inline LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Column matroid M[A]: a set of labels is independent iff the corresponding
// columns of A are linearly independent over F_q.
class VectorMatroid {
 public:
  VectorMatroid(FieldMatrix rep, std::vector<Label> labels)
      : rep_(std::move(rep)), labels_(std::move(labels)) {
    if (labels_.size() != rep_.cols()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  std::to_string(labels_.size()) + " labels for " +
                      std::to_string(rep_.cols()) + " columns");
    }
    for (std::size_t c = 0; c < labels_.size(); ++c) {
      if (!index_.emplace(labels_[c], c).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate ground-set label " + std::to_string(labels_[c]));
      }
    }
  }

  // Labels 1..cols.
  explicit VectorMatroid(FieldMatrix rep)
      : VectorMatroid(rep, default_labels(rep.cols())) {}

  const FieldMatrix& representation() const noexcept { return rep_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const PrimeField& field() const noexcept { return rep_.field(); }

  LabelSet ground_set() const { return make_label_set(labels_); }

  bool contains(Label l) const { return index_.count(l) != 0; }

  std::size_t column_of(Label l) const {
    const auto it = index_.find(l);
    if (it == index_.end()) {
      throw Error(ErrorCode::kUnknownLabel, "label " + std::to_string(l) + " not in E(M)");
    }
    return it->second;
  }

  std::vector<std::size_t> columns_of(const std::vector<Label>& set) const {
    std::vector<std::size_t> cols;
    cols.reserve(set.size());
    for (Label l : set) cols.push_back(column_of(l));
    return cols;
  }

  FieldMatrix submatrix(const std::vector<Label>& set) const {
    return rep_.select_columns(columns_of(set));
  }

  std::size_t rank() const { return ecic::rank(rep_); }

 private:
  static std::vector<Label> default_labels(std::size_t n) {
    std::vector<Label> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Label>(i + 1);
    return out;
  }

  FieldMatrix rep_;
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
};

inline std::size_t rank_of(const VectorMatroid& m, const std::vector<Label>& set) {
  if (set.empty()) return 0;
  return rank(m.submatrix(set));
}

inline bool is_independent(const VectorMatroid& m, const LabelSet& set) {
  return rank_of(m, set) == set.size();
}

// cl(S) = { e : r(S + e) = r(S) }.
inline LabelSet closure(const VectorMatroid& m, const LabelSet& set) {
  const std::size_t base = rank_of(m, set);
  LabelSet out;
  std::vector<Label> probe = set;
  probe.push_back(0);
  for (Label e : m.labels()) {
    probe.back() = e;
    if (rank_of(m, probe) == base) out.push_back(e);
  }
  return make_label_set(std::move(out));
}

// Greedy extension of an independent set to a basis, scanning labels in
// column order.
inline LabelSet extend_to_basis(const VectorMatroid& m, const LabelSet& set) {
  if (!is_independent(m, set)) {
    throw Error(ErrorCode::kDependentSet, "cannot extend a dependent set to a basis");
  }
  std::vector<Label> basis = set;
  std::size_t r = basis.size();
  const std::size_t target = m.rank();
  for (Label e : m.labels()) {
    if (r == target) break;
    if (std::find(basis.begin(), basis.end(), e) != basis.end()) continue;
    basis.push_back(e);
    if (rank_of(m, basis) > r) {
      ++r;
    } else {
      basis.pop_back();
    }
  }
  return make_label_set(std::move(basis));
}

// M / T by pivot-and-delete. Elements of T are processed in increasing label
// order: a nonzero column is pivoted to a single nonzero entry and that row
// and column are removed; a loop (zero column) is removed on its own.
inline VectorMatroid contract(const VectorMatroid& m, const LabelSet& t) {
  for (Label l : t) (void)m.column_of(l);
  const LabelSet order = make_label_set(t);

  FieldMatrix rep = m.representation();
  std::vector<Label> labels = m.labels();
  const PrimeField& f = rep.field();
  for (Label l : order) {
    const auto col = static_cast<std::size_t>(
        std::find(labels.begin(), labels.end(), l) - labels.begin());
    std::size_t pivot = 0;
    while (pivot < rep.rows() && rep(pivot, col) == 0) ++pivot;
    if (pivot == rep.rows()) {
      rep = rep.without_column(col);
    } else {
      const Elem inv = f.inv(rep(pivot, col));
      for (std::size_t r = 0; r < rep.rows(); ++r) {
        if (r != pivot && rep(r, col) != 0) {
          rep.add_row_multiple(r, pivot, f.neg(f.mul(rep(r, col), inv)));
        }
      }
      rep = rep.without_row_and_column(pivot, col);
    }
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(col));
  }
  return VectorMatroid(std::move(rep), std::move(labels));
}

inline constexpr std::size_t kMaxAxiomGroundSet = 12;

// Exhaustive check of the independence axioms over every subset of E(M):
// the empty set is independent, independence is closed under subsets, and
// the augmentation property holds.
inline bool check_axioms(const VectorMatroid& m) {
  const std::size_t n = m.size();
  if (n > kMaxAxiomGroundSet) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "axiom check limited to " + std::to_string(kMaxAxiomGroundSet) +
                    " elements, got " + std::to_string(n));
  }
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<bool> independent(subsets);
  std::vector<std::size_t> cols;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    cols.clear();
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (1u << b)) cols.push_back(b);
    }
    independent[mask] =
        cols.empty() || rank(m.representation().select_columns(cols)) == cols.size();
  }

  if (!independent[0]) return false;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (!independent[mask]) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if ((mask & (1u << b)) && !independent[mask & ~(1u << b)]) return false;
    }
  }
  for (std::uint32_t x1 = 0; x1 < subsets; ++x1) {
    if (!independent[x1]) continue;
    for (std::uint32_t x2 = 0; x2 < subsets; ++x2) {
      if (!independent[x2] || std::popcount(x1) >= std::popcount(x2)) continue;
      bool augmentable = false;
      for (std::uint32_t rest = x2 & ~x1; rest != 0; rest &= rest - 1) {
        const std::uint32_t e = rest & (~rest + 1);
        if (independent[x1 | e]) {
          augmentable = true;
          break;
        }
      }
      if (!augmentable) return false;
    }
  }
  return true;
}

}  // namespace ecic
