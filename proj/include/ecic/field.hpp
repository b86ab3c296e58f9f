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
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecic/error.hpp"

namespace ecic {

using Elem = std::uint8_t;

// Arithmetic in F_q for a prime q <= 251. Elements are stored reduced.
class PrimeField {
 public:
  static constexpr int kMaxModulus = 251;

  explicit PrimeField(int q) : q_(q) {
    if (q < 2 || q > kMaxModulus || !is_prime(q)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "field modulus must be a prime in [2, 251], got " +
                      std::to_string(q));
    }
  }

  int modulus() const noexcept { return q_; }

  Elem reduce(long long value) const noexcept {
    long long r = value % q_;
    if (r < 0) r += q_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const noexcept { return reduce(int{a} + b); }
  Elem sub(Elem a, Elem b) const noexcept { return reduce(int{a} - b); }
  Elem mul(Elem a, Elem b) const noexcept { return reduce(int{a} * b); }
  Elem neg(Elem a) const noexcept { return reduce(-int{a}); }

  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
    // Fermat: a^(q-2).
    int result = 1;
    int base = a;
    for (int e = q_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % q_;
      base = base * base % q_;
    }
    return static_cast<Elem>(result);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  static bool is_prime(int q) {
    for (int d = 2; d * d <= q; ++d) {
      if (q % d == 0) return false;
    }
    return q >= 2;
  }

  int q_;
};

class FieldVector {
 public:
  FieldVector(PrimeField field, std::size_t size)
      : field_(field), entries_(size, 0) {}

  FieldVector(PrimeField field, std::span<const long long> values)
      : field_(field) {
    entries_.reserve(values.size());
    for (long long v : values) entries_.push_back(field.reduce(v));
  }

  FieldVector(PrimeField field, std::initializer_list<long long> values)
      : FieldVector(field, std::span<const long long>(values.begin(),
                                                      values.size())) {}

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }

  Elem operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, long long value) { entries_[i] = field_.reduce(value); }

  std::span<const Elem> entries() const noexcept { return entries_; }

  friend bool operator==(const FieldVector&, const FieldVector&) = default;

 private:
  PrimeField field_;
  std::vector<Elem> entries_;
};

// Dense row-major matrix over a prime field.
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static FieldMatrix identity(PrimeField field, std::size_t size) {
    FieldMatrix m(field, size, size);
    for (std::size_t i = 0; i < size; ++i) m.entries_[i * size + i] = 1;
    return m;
  }

  static FieldMatrix from_rows(PrimeField field,
                               const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FieldMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "ragged matrix: row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " entries, expected " +
                        std::to_string(cols));
      }
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }

  static FieldMatrix from_rows(
      PrimeField field,
      std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    return from_rows(field, copy);
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, long long value) {
    entries_[r * cols_ + c] = field_.reduce(value);
  }

  std::span<const Elem> row_span(std::size_t r) const {
    return std::span<const Elem>(entries_).subspan(r * cols_, cols_);
  }

  FieldVector row(std::size_t r) const {
    FieldVector v(field_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.set(c, (*this)(r, c));
    return v;
  }

  FieldVector column(std::size_t c) const {
    FieldVector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, (*this)(r, c));
    return v;
  }

  bool column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if ((*this)(r, c) != 0) return false;
    }
    return true;
  }

  FieldMatrix select_rows(std::span<const std::size_t> indices) const {
    FieldMatrix m(field_, indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      for (std::size_t c = 0; c < cols_; ++c) {
        m.entries_[i * cols_ + c] = (*this)(indices[i], c);
      }
    }
    return m;
  }

  FieldMatrix select_columns(std::span<const std::size_t> indices) const {
    FieldMatrix m(field_, rows_, indices.size());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t i = 0; i < indices.size(); ++i) {
        m.entries_[r * indices.size() + i] = (*this)(r, indices[i]);
      }
    }
    return m;
  }

  FieldMatrix transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    }
    return t;
  }

  // [this | other]
  FieldMatrix hstack(const FieldMatrix& other) const {
    require_same_field(other);
    if (other.rows_ != rows_) {
      throw Error(ErrorCode::kDimensionMismatch, "hstack row counts differ");
    }
    FieldMatrix m(field_, rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m.set(r, c, (*this)(r, c));
      for (std::size_t c = 0; c < other.cols_; ++c) m.set(r, cols_ + c, other(r, c));
    }
    return m;
  }

  // [this ; other]
  FieldMatrix vstack(const FieldMatrix& other) const {
    require_same_field(other);
    if (other.cols_ != cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "vstack column counts differ");
    }
    FieldMatrix m(field_, rows_ + other.rows_, cols_);
    std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
    std::copy(other.entries_.begin(), other.entries_.end(),
              m.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
    return m;
  }

  // Elementary operations. Row operations and nonzero column scaling leave
  // the column matroid unchanged.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
    }
  }

  void scale_row(std::size_t r, Elem factor) {
    for (std::size_t c = 0; c < cols_; ++c) {
      entries_[r * cols_ + c] = field_.mul(entries_[r * cols_ + c], factor);
    }
  }

  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, Elem factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      entries_[target * cols_ + c] = field_.add(
          entries_[target * cols_ + c], field_.mul(factor, entries_[source * cols_ + c]));
    }
  }

  void scale_column(std::size_t c, Elem factor) {
    for (std::size_t r = 0; r < rows_; ++r) {
      entries_[r * cols_ + c] = field_.mul(entries_[r * cols_ + c], factor);
    }
  }

  FieldMatrix without_row_and_column(std::size_t row, std::size_t col) const {
    FieldMatrix m(field_, rows_ - 1, cols_ - 1);
    std::size_t out = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c == col) continue;
        m.entries_[out++] = (*this)(r, c);
      }
    }
    return m;
  }

  FieldMatrix without_column(std::size_t col) const {
    FieldMatrix m(field_, rows_, cols_ - 1);
    std::size_t out = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c != col) m.entries_[out++] = (*this)(r, c);
      }
    }
    return m;
  }

  FieldMatrix with_row_inserted(std::size_t position) const {
    FieldMatrix m(field_, rows_ + 1, cols_);
    for (std::size_t r = 0, src = 0; r < rows_ + 1; ++r) {
      if (r == position) continue;
      for (std::size_t c = 0; c < cols_; ++c) m.entries_[r * cols_ + c] = (*this)(src, c);
      ++src;
    }
    return m;
  }

  FieldMatrix without_row(std::size_t row) const {
    FieldMatrix m(field_, rows_ - 1, cols_);
    for (std::size_t r = 0, dst = 0; r < rows_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0; c < cols_; ++c) m.entries_[dst * cols_ + c] = (*this)(r, c);
      ++dst;
    }
    return m;
  }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  void require_same_field(const FieldMatrix& other) const {
    if (!(other.field_ == field_)) {
      throw Error(ErrorCode::kInvalidArgument, "matrices over different fields");
    }
  }

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << int{v[i]};
  }
  return os << ')';
}

inline std::ostream& operator<<(std::ostream& os, const FieldMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << int{m(r, c)};
    }
    os << '\n';
  }
  return os;
}

}  // namespace ecic
