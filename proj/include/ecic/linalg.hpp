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

#include <cstddef>
#include <vector>

#include "ecic/field.hpp"

namespace ecic {

struct RrefResult {
  FieldMatrix reduced;
  // 0-based pivot columns, increasing.
  std::vector<std::size_t> pivot_cols;
};

// Reduced row-echelon form by Gauss-Jordan elimination mod q. Pivot rows are
// scaled to 1 and every other entry of a pivot column is cleared.
inline RrefResult rref(FieldMatrix m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(lead_row, p);
    m.scale_row(lead_row, f.inv(m(lead_row, c)));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != lead_row && m(r, c) != 0) {
        m.add_row_multiple(r, lead_row, f.neg(m(r, c)));
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const FieldMatrix& m) {
  // Forward elimination only; no need for the full reduced form.
  FieldMatrix work = m;
  const PrimeField& f = work.field();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < work.cols() && lead_row < work.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < work.rows() && work(p, c) == 0) ++p;
    if (p == work.rows()) continue;
    work.swap_rows(lead_row, p);
    const Elem inv = f.inv(work(lead_row, c));
    for (std::size_t r = lead_row + 1; r < work.rows(); ++r) {
      if (work(r, c) != 0) {
        work.add_row_multiple(r, lead_row, f.neg(f.mul(work(r, c), inv)));
      }
    }
    ++lead_row;
  }
  return lead_row;
}

inline FieldMatrix as_column(const FieldVector& v) {
  FieldMatrix m(v.field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

// v in the column space of m, decided as rank([m | v]) == rank(m).
inline bool in_column_span(const FieldMatrix& m, const FieldVector& v) {
  if (v.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of length " + std::to_string(v.size()) +
                    " against matrix with " + std::to_string(m.rows()) + " rows");
  }
  if (!(v.field() == m.field())) {
    throw Error(ErrorCode::kInvalidArgument, "vector and matrix over different fields");
  }
  return rank(m.hstack(as_column(v))) == rank(m);
}

// Row vector times matrix: z M.
inline FieldVector vec_mat_mul(const FieldVector& z, const FieldMatrix& m) {
  if (z.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of length " + std::to_string(z.size()) +
                    " times matrix with " + std::to_string(m.rows()) + " rows");
  }
  const PrimeField& f = m.field();
  FieldVector out(f, m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    int acc = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      acc = (acc + int{z[r]} * m(r, c)) % f.modulus();
    }
    out.set(c, acc);
  }
  return out;
}

// Hamming weight.
inline std::size_t weight(const FieldVector& v) {
  std::size_t w = 0;
  for (Elem e : v.entries()) w += (e != 0);
  return w;
}

}  // namespace ecic
