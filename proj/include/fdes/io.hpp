/*
 * Copyright 2026 The fdes authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>
#include <openssl/evp.h>

#include "fdes/automaton.hpp"
#include "fdes/errors.hpp"
#include "fdes/grade.hpp"
#include "fdes/matrix.hpp"
#include "fdes/synthesis.hpp"

namespace fdes {

// Model documents are JSON objects with grades written as decimal strings,
// which keeps the exact fixed-point core free of binary-float contamination:
//
//   {
//     "name": "plant",
//     "states": 2,
//     "initial": ["0.9", "0.1"],
//     "marked": ["0.1", "0.8"],
//     "events": { "sigma": [["0.9", "0.8"], ["0", "0.1"]] },
//     "uncontrollability": { "sigma": "0.7" }        // optional
//   }
//
// The alphabet order is the document order of the "events" object.

using ojson = nlohmann::ordered_json;

struct ParsedModel {
  FuzzyAutomaton automaton;
  std::optional<UncontrollabilityMap> uncontrollability;
};

/// JSON parse that additionally rejects duplicate object keys, which the
/// grammar would otherwise silently collapse.
inline ojson parse_json_strict(const std::string& text) {
  std::vector<std::set<std::string>> object_keys;
  std::optional<std::string> duplicate;
  const ojson::parser_callback_t watch_keys =
      [&](int, ojson::parse_event_t event, ojson& value) {
        switch (event) {
          case ojson::parse_event_t::object_start:
            object_keys.emplace_back();
            break;
          case ojson::parse_event_t::object_end:
            object_keys.pop_back();
            break;
          case ojson::parse_event_t::key: {
            const auto& key = value.get_ref<const std::string&>();
            if (!duplicate && !object_keys.back().insert(key).second) {
              duplicate = key;
            }
            break;
          }
          default:
            break;
        }
        return true;
      };
  ojson doc;
  try {
    doc = ojson::parse(text, watch_keys);
  } catch (const ojson::parse_error& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
  if (duplicate) throw ParseError("duplicate key '" + *duplicate + "'");
  return doc;
}

/// Labels are case-sensitive identifiers; a trailing-prime style marker is
/// allowed so primed event names stay readable.
inline bool valid_event_label(std::string_view label) {
  const auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  const auto tail = [&](char c) {
    return head(c) || (c >= '0' && c <= '9') || c == '\'';
  };
  if (label.empty() || !head(label[0])) return false;
  for (const char c : label.substr(1)) {
    if (!tail(c)) return false;
  }
  return true;
}

namespace detail {

inline Grade grade_at(const ojson& j, const std::string& field) {
  if (!j.is_string()) {
    throw ParseError("expected a grade as a decimal string", field);
  }
  try {
    return parse_grade(j.get_ref<const std::string&>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), field);
  }
}

inline FuzzyVector vector_at(const ojson& j, std::size_t n,
                             const std::string& field) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError("expected an array of " + std::to_string(n) + " grades",
                     field);
  }
  std::vector<Grade> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    entries.push_back(grade_at(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return FuzzyMatrix::row(std::move(entries));
}

inline FuzzyMatrix square_matrix_at(const ojson& j, std::size_t n,
                                    const std::string& field) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError("expected an array of " + std::to_string(n) + " rows",
                     field);
  }
  FuzzyMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    const ojson& row = j[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("expected a row of " + std::to_string(n) + " grades",
                       row_field);
    }
    for (std::size_t k = 0; k < n; ++k) {
      out(i, k) = grade_at(row[k], row_field + "[" + std::to_string(k) + "]");
    }
  }
  return out;
}

}  // namespace detail

inline ParsedModel parse_model(const std::string& text) {
  const ojson doc = parse_json_strict(text);
  if (!doc.is_object()) throw ParseError("model document must be a JSON object");

  static const std::set<std::string> known = {
      "name", "states", "initial", "marked", "events", "uncontrollability"};
  for (const auto& item : doc.items()) {
    if (!known.contains(item.key())) throw ParseError("unknown field", item.key());
  }
  for (const char* field : {"name", "states", "initial", "marked", "events"}) {
    if (!doc.contains(field)) throw ParseError("missing field", field);
  }

  if (!doc["name"].is_string()) throw ParseError("expected a string", "name");
  std::string name = doc["name"].get<std::string>();

  if (!doc["states"].is_number_unsigned() ||
      doc["states"].get<std::uint64_t>() == 0) {
    throw ParseError("expected a positive integer", "states");
  }
  const auto n = static_cast<std::size_t>(doc["states"].get<std::uint64_t>());

  FuzzyVector initial = detail::vector_at(doc["initial"], n, "initial");
  FuzzyVector marked = detail::vector_at(doc["marked"], n, "marked");

  const ojson& events = doc["events"];
  if (!events.is_object()) {
    throw ParseError("expected an object mapping labels to matrices", "events");
  }
  std::vector<std::string> alphabet;
  std::vector<FuzzyMatrix> matrices;
  for (const auto& item : events.items()) {
    if (!valid_event_label(item.key())) {
      throw ParseError("invalid event label '" + item.key() + "'", "events");
    }
    alphabet.push_back(item.key());
    matrices.push_back(
        detail::square_matrix_at(item.value(), n, "events." + item.key()));
  }

  std::optional<UncontrollabilityMap> uc;
  if (doc.contains("uncontrollability")) {
    const ojson& degrees = doc["uncontrollability"];
    if (!degrees.is_object()) {
      throw ParseError("expected an object mapping labels to grades",
                       "uncontrollability");
    }
    UncontrollabilityMap map;
    for (const auto& item : degrees.items()) {
      if (std::find(alphabet.begin(), alphabet.end(), item.key()) ==
          alphabet.end()) {
        throw ParseError("degree given for unknown event '" + item.key() + "'",
                         "uncontrollability");
      }
      map.set(item.key(),
              detail::grade_at(item.value(), "uncontrollability." + item.key()));
    }
    for (const std::string& label : alphabet) {
      if (!map.contains(label)) {
        throw ParseError("missing degree for event '" + label + "'",
                         "uncontrollability");
      }
    }
    uc = std::move(map);
  }

  return ParsedModel{FuzzyAutomaton(std::move(name), n, std::move(alphabet),
                                    std::move(matrices), std::move(initial),
                                    std::move(marked)),
                     std::move(uc)};
}

inline ojson matrix_to_json(const FuzzyMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_grade(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline FuzzyMatrix matrix_from_json(const ojson& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("expected a non-empty array of rows", field);
  }
  const std::size_t rows = j.size();
  const ojson& first = j[0];
  if (!first.is_array() || first.empty()) {
    throw ParseError("expected a non-empty row", field + "[0]");
  }
  const std::size_t cols = first.size();
  FuzzyMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ParseError("ragged matrix row", row_field);
    }
    for (std::size_t k = 0; k < cols; ++k) {
      out(i, k) =
          detail::grade_at(j[i][k], row_field + "[" + std::to_string(k) + "]");
    }
  }
  return out;
}

/// Canonical rendering: fixed field order, alphabet order for events, grades
/// in their shortest decimal form. parse -> serialize -> parse is the
/// identity on canonical documents.
inline std::string serialize_model(
    const FuzzyAutomaton& g,
    const std::optional<UncontrollabilityMap>& uc = std::nullopt) {
  ojson doc;
  doc["name"] = g.name();
  doc["states"] = g.state_count();
  const auto vector_json = [](const FuzzyVector& v) {
    ojson out = ojson::array();
    for (std::size_t j = 0; j < v.cols(); ++j) out.push_back(format_grade(v(0, j)));
    return out;
  };
  doc["initial"] = vector_json(g.initial());
  doc["marked"] = vector_json(g.marked());
  ojson events;
  for (const std::string& label : g.alphabet()) {
    events[label] = matrix_to_json(g.event_matrix(label));
  }
  doc["events"] = std::move(events);
  if (uc) {
    ojson degrees;
    for (const std::string& label : g.alphabet()) {
      degrees[label] = format_grade(uc->uncontrollability(label));
    }
    doc["uncontrollability"] = std::move(degrees);
  }
  return doc.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline ParsedModel load_model_file(const std::string& path) {
  try {
    return parse_model(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()), path);
  }
}

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

// Machine-readable run reports ("schema": 1). Witness matrices reuse the
// decimal-string encoding, so a report round-trips losslessly and a witness
// fed back in re-verifies.

struct ReportInput {
  std::string name;
  std::string path;
  std::string sha256;
};

struct ReportCondition {
  std::string name;
  bool holds = false;
  std::optional<FuzzyMatrix> witness;
};

struct ReportDocument {
  int schema = 1;
  std::string command;
  std::vector<ReportInput> inputs;
  std::string verdict;
  int exit_code = 0;
  std::vector<ReportCondition> conditions;
  std::optional<std::string> value;   // `lang` result
  std::optional<std::string> output;  // path written by compose / plus
  std::int64_t timing_ms = 0;
};

inline ojson report_to_json(const ReportDocument& r) {
  ojson doc;
  doc["schema"] = r.schema;
  doc["command"] = r.command;
  ojson inputs = ojson::array();
  for (const ReportInput& input : r.inputs) {
    ojson entry;
    entry["name"] = input.name;
    entry["path"] = input.path;
    entry["sha256"] = input.sha256;
    inputs.push_back(std::move(entry));
  }
  doc["inputs"] = std::move(inputs);
  doc["verdict"] = r.verdict;
  doc["exit_code"] = r.exit_code;
  ojson conditions = ojson::array();
  for (const ReportCondition& c : r.conditions) {
    ojson entry;
    entry["name"] = c.name;
    entry["holds"] = c.holds;
    if (c.witness) entry["witness"] = matrix_to_json(*c.witness);
    conditions.push_back(std::move(entry));
  }
  doc["conditions"] = std::move(conditions);
  if (r.value) doc["value"] = *r.value;
  if (r.output) doc["output"] = *r.output;
  doc["timing_ms"] = r.timing_ms;
  return doc;
}

inline ReportDocument report_from_json(const std::string& text) {
  const ojson doc = parse_json_strict(text);
  if (!doc.is_object()) throw ParseError("report must be a JSON object");
  ReportDocument out;
  out.schema = doc.at("schema").get<int>();
  out.command = doc.at("command").get<std::string>();
  for (const ojson& input : doc.at("inputs")) {
    out.inputs.push_back(ReportInput{input.at("name").get<std::string>(),
                                     input.at("path").get<std::string>(),
                                     input.at("sha256").get<std::string>()});
  }
  out.verdict = doc.at("verdict").get<std::string>();
  out.exit_code = doc.at("exit_code").get<int>();
  for (const ojson& c : doc.at("conditions")) {
    ReportCondition condition;
    condition.name = c.at("name").get<std::string>();
    condition.holds = c.at("holds").get<bool>();
    if (c.contains("witness")) {
      condition.witness =
          matrix_from_json(c.at("witness"), "conditions.witness");
    }
    out.conditions.push_back(std::move(condition));
  }
  if (doc.contains("value")) out.value = doc.at("value").get<std::string>();
  if (doc.contains("output")) out.output = doc.at("output").get<std::string>();
  out.timing_ms = doc.at("timing_ms").get<std::int64_t>();
  return out;
}

}  // namespace fdes
