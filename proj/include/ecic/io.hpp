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
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecic/bridge.hpp"
#include "ecic/error.hpp"
#include "ecic/index_coding.hpp"
#include "ecic/matroid.hpp"

// Instance and certificate files are JSON objects. All message, receiver and
// transmission indices in files are 1-based.
//
// Instance:
//   { "q": 2, "m": 3, "n": 3,
//     "side_info": [[2], [1, 3], [1, 2]],
//     "demands": [1, 2, 3],
//     "deltas": [2, 1, 1],
//     "code": [[1, 1, 1, 1, 0, 1, 0], ...] }          // optional, n rows
//
// Certificate:
//   { "q": 2,
//     "representation": [[...], ...],
//     "labels": [1, 2, ..., n + 2N],
//     "message_labels": [...], "code_labels": [...],
//     "basis": [...], "basis_tail": [...] }
namespace ecic {

struct Instance {
  Problem problem;
  ErrorProfile profile;
  std::optional<IndexCode> code;
};

namespace detail {

using json = nlohmann::ordered_json;

[[noreturn]] inline void parse_fail(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kParse, "field '" + field + "': " + why);
}

inline const json& require(const json& obj, const std::string& key) {
  if (!obj.is_object()) parse_fail(key, "document is not a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(key, "missing");
  return *it;
}

inline long long as_integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) parse_fail(field, "expected an integer, got " + v.dump());
  return v.get<long long>();
}

inline std::size_t as_count(const json& v, const std::string& field) {
  const long long x = as_integer(v, field);
  if (x < 0) parse_fail(field, "expected a non-negative integer, got " + std::to_string(x));
  return static_cast<std::size_t>(x);
}

inline std::vector<long long> as_integer_list(const json& v, const std::string& field) {
  if (!v.is_array()) parse_fail(field, "expected a list of integers");
  std::vector<long long> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(as_integer(v[k], field + "[" + std::to_string(k + 1) + "]"));
  }
  return out;
}

// 1-based index in [1, bound] -> 0-based.
inline std::size_t as_index(const json& v, std::size_t bound, const std::string& field) {
  const long long x = as_integer(v, field);
  if (x < 1 || static_cast<std::size_t>(x) > bound) {
    parse_fail(field, "index " + std::to_string(x) + " outside 1.." + std::to_string(bound));
  }
  return static_cast<std::size_t>(x - 1);
}

inline PrimeField as_field(const json& v) {
  const long long q = as_integer(v, "q");
  try {
    return PrimeField(static_cast<int>(q));
  } catch (const Error& e) {
    parse_fail("q", e.what());
  }
}

inline FieldMatrix as_matrix(const json& v, const PrimeField& f, const std::string& field) {
  if (!v.is_array()) parse_fail(field, "expected a list of rows");
  std::vector<std::vector<long long>> rows;
  for (std::size_t r = 0; r < v.size(); ++r) {
    rows.push_back(as_integer_list(v[r], field + "[" + std::to_string(r + 1) + "]"));
  }
  try {
    return FieldMatrix::from_rows(f, rows);
  } catch (const Error& e) {
    parse_fail(field, e.what());
  }
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

inline json matrix_to_json(const FieldMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int{m(r, c)});
    rows.push_back(std::move(row));
  }
  return rows;
}

// Top-level keys one per line, nested lists compact, matrices one row per
// line.
inline std::string format_document(const json& doc) {
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : doc.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(key).dump() + ": ";
    const bool matrix = value.is_array() && !value.empty() &&
                        std::all_of(value.begin(), value.end(), [](const json& row) {
                          return row.is_array() && std::all_of(row.begin(), row.end(),
                                                               [](const json& e) {
                                                                 return e.is_number();
                                                               });
                        }) && (key == "code" || key == "representation");
    if (matrix) {
      out += "[\n";
      for (std::size_t r = 0; r < value.size(); ++r) {
        out += "    " + value[r].dump() + (r + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
  }
  return out + "\n}\n";
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Parses an instance and validates it. Problem-level violations surface with
// their own codes (demand-in-side-info, index-out-of-range).
inline Instance parse_instance(const std::string& text) {
  using detail::as_count;
  using detail::as_index;
  using detail::parse_fail;
  using detail::require;
  const auto doc = detail::parse_json(text);
  const PrimeField f = detail::as_field(require(doc, "q"));
  const std::size_t m = as_count(require(doc, "m"), "m");
  const std::size_t n = as_count(require(doc, "n"), "n");
  if (n == 0) parse_fail("n", "need at least one message");
  if (m == 0) parse_fail("m", "need at least one receiver");

  const auto& side = require(doc, "side_info");
  if (!side.is_array() || side.size() != m) parse_fail("side_info", "expected m lists");
  const auto& demands = require(doc, "demands");
  if (!demands.is_array() || demands.size() != m) parse_fail("demands", "expected m indices");
  const auto& deltas = require(doc, "deltas");
  if (!deltas.is_array() || deltas.size() != m) parse_fail("deltas", "expected m integers");

  Instance inst{Problem{f, n, {}, {}}, ErrorProfile{}, std::nullopt};
  for (std::size_t i = 0; i < m; ++i) {
    const std::string at = "side_info[" + std::to_string(i + 1) + "]";
    if (!side[i].is_array()) parse_fail(at, "expected a list of message indices");
    std::vector<std::size_t> chi;
    for (std::size_t k = 0; k < side[i].size(); ++k) {
      chi.push_back(as_index(side[i][k], n, at + "[" + std::to_string(k + 1) + "]"));
    }
    inst.problem.side_info.push_back(std::move(chi));
    inst.problem.demand.push_back(
        as_index(demands[i], n, "demands[" + std::to_string(i + 1) + "]"));
    inst.profile.deltas.push_back(as_count(deltas[i], "deltas[" + std::to_string(i + 1) + "]"));
  }
  validate(inst.problem, inst.profile);

  if (const auto it = doc.find("code"); it != doc.end() && !it->is_null()) {
    FieldMatrix code = detail::as_matrix(*it, f, "code");
    if (code.rows() != n) {
      parse_fail("code", "has " + std::to_string(code.rows()) + " rows, expected n = " +
                             std::to_string(n));
    }
    if (code.cols() == 0) parse_fail("code", "has no columns");
    inst.code = IndexCode{std::move(code)};
  }
  return inst;
}

inline Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

inline std::string instance_to_json(const Instance& inst) {
  using detail::json;
  const Problem& p = inst.problem;
  json doc;
  doc["q"] = p.field.modulus();
  doc["m"] = p.receivers();
  doc["n"] = p.messages;
  json side = json::array();
  json demands = json::array();
  for (std::size_t i = 0; i < p.receivers(); ++i) {
    json chi = json::array();
    for (std::size_t j : p.known(i)) chi.push_back(j + 1);
    side.push_back(std::move(chi));
    demands.push_back(p.demand[i] + 1);
  }
  doc["side_info"] = std::move(side);
  doc["demands"] = std::move(demands);
  doc["deltas"] = inst.profile.deltas;
  if (inst.code) doc["code"] = detail::matrix_to_json(inst.code->matrix);
  return detail::format_document(doc);
}

inline Certificate parse_certificate(const std::string& text) {
  using detail::parse_fail;
  using detail::require;
  const auto doc = detail::parse_json(text);
  const PrimeField f = detail::as_field(require(doc, "q"));
  FieldMatrix rep = detail::as_matrix(require(doc, "representation"), f, "representation");
  auto labels_of = [&](const std::string& key) {
    std::vector<Label> out;
    for (long long v : detail::as_integer_list(require(doc, key), key)) {
      out.push_back(static_cast<Label>(v));
    }
    return out;
  };
  std::vector<Label> labels = labels_of("labels");
  if (labels.size() != rep.cols()) {
    parse_fail("labels", std::to_string(labels.size()) + " labels for " +
                             std::to_string(rep.cols()) + " columns");
  }
  std::optional<VectorMatroid> matroid;
  try {
    matroid.emplace(std::move(rep), std::move(labels));
  } catch (const Error& e) {
    parse_fail("labels", e.what());
  }
  Certificate cert{std::move(*matroid), GroundMap{labels_of("message_labels"), labels_of("code_labels")},
                   labels_of("basis_tail")};
  const LabelSet stated = make_label_set(labels_of("basis"));
  if (stated != cert.basis()) {
    throw Error(ErrorCode::kMalformedCertificate,
                "basis differs from message_labels together with basis_tail");
  }
  return cert;
}

inline Certificate load_certificate(const std::string& path) {
  return parse_certificate(read_file(path));
}

inline std::string certificate_to_json(const Certificate& cert) {
  using detail::json;
  json doc;
  doc["q"] = cert.matroid.field().modulus();
  doc["representation"] = detail::matrix_to_json(cert.matroid.representation());
  doc["labels"] = cert.matroid.labels();
  doc["message_labels"] = cert.g.message_labels;
  doc["code_labels"] = cert.g.code_labels;
  doc["basis"] = cert.basis();
  doc["basis_tail"] = cert.basis_tail;
  return detail::format_document(doc);
}

}  // namespace ecic
