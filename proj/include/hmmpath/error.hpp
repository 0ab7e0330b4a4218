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

#include <stdexcept>
#include <string>

namespace hmmpath {

enum class ErrorCode {
  // model validation
  dimension_mismatch,
  not_stochastic,
  negative_entry,
  empty_model,
  // decoding / evaluation
  symbol_out_of_range,
  no_viable_path,
  too_large,
  empty_input,
  // file formats and ingestion
  parse_error,
  unknown_observation,
  empty_rule_set,
  csv_malformed,
  missing_column,
  // misc
  io_error,
  mismatch,
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_stochastic: return "NotStochastic";
    case ErrorCode::negative_entry: return "NegativeEntry";
    case ErrorCode::empty_model: return "EmptyModel";
    case ErrorCode::symbol_out_of_range: return "SymbolOutOfRange";
    case ErrorCode::no_viable_path: return "NoViablePath";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unknown_observation: return "UnknownObservation";
    case ErrorCode::empty_rule_set: return "EmptyRuleSet";
    case ErrorCode::csv_malformed: return "CsvMalformed";
    case ErrorCode::missing_column: return "MissingColumn";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::mismatch: return "Mismatch";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hmmpath
