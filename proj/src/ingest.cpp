// Copyright 2026 The hmmpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hmmpath/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "hmmpath/model_io.hpp"

namespace hmmpath {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

[[noreturn]] void malformed(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw Error(ErrorCode::csv_malformed, msg.str());
}

}  // namespace

RuleSet compile_rules(std::string_view json_text, const HmmModel& model) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "rules document is not a JSON array");
  if (j.empty()) throw Error(ErrorCode::empty_rule_set, "rules file contains no rules");

  RuleSet set;
  set.num_observations = model.num_observations();
  for (size_t idx = 0; idx < j.size(); ++idx) {
    const auto& item = j[idx];
    if (!item.is_object() || !item.contains("observation") ||
        !item["observation"].is_number_integer())
      throw Error(ErrorCode::parse_error,
                  "rule " + std::to_string(idx) + ": missing integer \"observation\"");

    Rule rule;
    rule.observation = item["observation"].get<int>();
    if (rule.observation < 0 || rule.observation >= model.num_observations())
      throw Error(ErrorCode::unknown_observation,
                  "rule " + std::to_string(idx) + ": observation index " +
                      std::to_string(rule.observation) + " outside [0, " +
                      std::to_string(model.num_observations()) + ")");

    if (!item.contains("all_of") || !item["all_of"].is_array() || item["all_of"].empty())
      throw Error(ErrorCode::parse_error,
                  "rule " + std::to_string(idx) + ": \"all_of\" must be a nonempty array");
    for (const auto& needle : item["all_of"]) {
      if (!needle.is_string() || needle.get<std::string>().empty())
        throw Error(ErrorCode::parse_error,
                    "rule " + std::to_string(idx) + ": \"all_of\" entries must be nonempty strings");
      rule.all_of.push_back(needle.get<std::string>());
    }
    if (item.contains("fields")) {
      if (!item["fields"].is_array())
        throw Error(ErrorCode::parse_error,
                    "rule " + std::to_string(idx) + ": \"fields\" must be an array");
      for (const auto& f : item["fields"]) {
        if (!f.is_string())
          throw Error(ErrorCode::parse_error,
                      "rule " + std::to_string(idx) + ": \"fields\" entries must be strings");
        rule.fields.push_back(f.get<std::string>());
      }
    }

    for (size_t prev = 0; prev < set.rules.size(); ++prev) {
      if (set.rules[prev] == rule) {
        set.warnings.push_back("rule " + std::to_string(idx) + " duplicates rule " +
                               std::to_string(prev));
      }
    }
    set.rules.push_back(std::move(rule));
  }
  return set;
}

RuleSet load_rules(const std::string& path, const HmmModel& model) {
  return compile_rules(read_file(path), model);
}

CsvTable parse_csv(std::string_view text) {
  // UTF-8 BOM, as emitted by ProcMon exports.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<CsvRecord> rows;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool field_started = false;
  int line = 1;
  int record_line = 1;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    rows.push_back({std::move(fields), record_line});
    fields.clear();
  };

  for (size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (in_quotes) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field += '"';
          ++pos;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started) {
          in_quotes = true;
          field_was_quoted = true;
          field_started = true;
        } else {
          malformed(line, "quote inside unquoted field or after closing quote");
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (pos + 1 < text.size() && text[pos + 1] == '\n') break;  // handled by \n
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        if (field_was_quoted) malformed(line, "data after closing quote");
        field_started = true;
        field += c;
    }
  }
  if (in_quotes) malformed(record_line, "unterminated quoted field");
  // Final record without trailing newline.
  if (field_started || field_was_quoted || !fields.empty()) end_record();

  CsvTable table;
  if (rows.empty()) throw Error(ErrorCode::csv_malformed, "no header row");
  table.header = std::move(rows.front().fields);
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].fields.size() != table.header.size())
      malformed(rows[r].line, "record has " + std::to_string(rows[r].fields.size()) +
                                  " fields, header has " + std::to_string(table.header.size()));
    table.records.push_back(std::move(rows[r]));
  }
  return table;
}

IngestResult parse_event_log(std::string_view csv_text, const RuleSet& rules,
                             std::string_view source_name) {
  const CsvTable table = parse_csv(csv_text);

  std::vector<std::string> header_lower;
  header_lower.reserve(table.header.size());
  for (const std::string& h : table.header) header_lower.push_back(lower(h));

  auto column_index = [&](const std::string& name) -> int {
    const std::string want = lower(name);
    for (size_t i = 0; i < header_lower.size(); ++i)
      if (header_lower[i] == want) return static_cast<int>(i);
    return -1;
  };

  // Resolve every rule's columns up front so a bad ruleset fails fast.
  std::vector<std::vector<int>> rule_columns(rules.rules.size());
  for (size_t r = 0; r < rules.rules.size(); ++r) {
    if (rules.rules[r].fields.empty()) {
      for (size_t i = 0; i < table.header.size(); ++i)
        rule_columns[r].push_back(static_cast<int>(i));
      continue;
    }
    for (const std::string& name : rules.rules[r].fields) {
      const int idx = column_index(name);
      if (idx < 0)
        throw Error(ErrorCode::missing_column,
                    "rule " + std::to_string(r) + " references column \"" + name +
                        "\" absent from the CSV header");
      rule_columns[r].push_back(idx);
    }
  }

  std::vector<std::vector<std::string>> needles_lower(rules.rules.size());
  for (size_t r = 0; r < rules.rules.size(); ++r)
    for (const std::string& needle : rules.rules[r].all_of)
      needles_lower[r].push_back(lower(needle));

  IngestResult result;
  for (const CsvRecord& record : table.records) {
    int emitted = -1;
    for (size_t r = 0; r < rules.rules.size(); ++r) {
      std::string haystack;
      for (const int col : rule_columns[r]) {
        haystack += lower(record.fields[col]);
        haystack += ' ';
      }
      const bool all_found = std::ranges::all_of(needles_lower[r], [&](const std::string& n) {
        return haystack.find(n) != std::string::npos;
      });
      if (all_found) {
        emitted = rules.rules[r].observation;
        break;
      }
    }
    if (emitted < 0) {
      ++result.skipped_records;
      continue;
    }
    ++result.matched_records;
    // Bursts of one logical action collapse to a single symbol.
    if (!result.sequence.symbols.empty() && result.sequence.symbols.back() == emitted) continue;
    result.sequence.symbols.push_back(emitted);
    result.sequence.provenance.push_back({std::string(source_name), record.line});
  }
  return result;
}

}  // namespace hmmpath
