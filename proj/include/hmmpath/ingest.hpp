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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hmmpath/model.hpp"

namespace hmmpath {

/// Maps log records to one observation symbol: a record matches when every
/// all_of substring occurs (case-insensitively) in the searched columns.
struct Rule {
  int observation = -1;               // symbol emitted on match
  std::vector<std::string> all_of;    // required substrings, nonempty
  std::vector<std::string> fields;    // column names searched; empty = all

  bool operator==(const Rule&) const = default;
};

/// Ordered rule list; the first matching rule wins, so order is significant.
struct RuleSet {
  std::vector<Rule> rules;
  int num_observations = 0;           // bound for observation indices
  std::vector<std::string> warnings;  // lint findings (duplicate rules)
};

// Rules file format: JSON array of {"observation": int, "all_of": [str...],
// "fields": [column names...]}. "fields" may be omitted or empty to search
// every column.

/// Parses and range-checks a rules file against the model. Throws
/// parse_error, unknown_observation or empty_rule_set.
RuleSet compile_rules(std::string_view json_text, const HmmModel& model);
RuleSet load_rules(const std::string& path, const HmmModel& model);

struct CsvRecord {
  std::vector<std::string> fields;
  int line = 0;  // 1-based line where the record starts
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRecord> records;
};

/// RFC-4180-style CSV: header row, quoted fields may contain commas,
/// doubled quotes and line breaks; a UTF-8 BOM is tolerated. Records whose
/// field count differs from the header, stray quotes and unterminated
/// quotes raise csv_malformed with the offending line.
CsvTable parse_csv(std::string_view text);

struct IngestResult {
  ObservationSequence sequence;
  int matched_records = 0;
  int skipped_records = 0;  // records no rule matched

  bool operator==(const IngestResult&) const = default;
};

/// Scans records in file order, emits the first matching rule's symbol per
/// record, and collapses runs of the same symbol to one (provenance keeps
/// the first matching line). Unmatched records are counted, not errors.
/// Throws csv_malformed or missing_column (a rule names a column the
/// header lacks).
IngestResult parse_event_log(std::string_view csv_text, const RuleSet& rules,
                             std::string_view source_name = {});

}  // namespace hmmpath
