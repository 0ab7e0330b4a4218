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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hmmpath/attack.hpp"
#include "hmmpath/decode.hpp"
#include "hmmpath/model.hpp"

namespace hmmpath {

/// Everything one decode produced: inputs, decoded path, score, verdict and
/// the backpointer audit table. A pure function of the inputs; renders as a
/// human-readable table or round-trippable JSON.
struct PredictionReport {
  std::vector<int> observations;
  std::vector<std::string> observation_labels;
  std::vector<int> path;
  std::vector<std::string> state_labels;
  double log_probability = 0.0;
  AttackMatch verdict;
  std::optional<int> skipped_records;  // set when the input came from a log
  std::vector<std::vector<int>> backpointers;

  bool operator==(const PredictionReport&) const = default;
};

PredictionReport make_report(const HmmModel& model, const ObservationSequence& obs,
                             const DecodeResult& decoded, const AttackMatch& verdict,
                             std::optional<int> skipped_records = std::nullopt);

std::string report_to_json(const PredictionReport& report);
PredictionReport report_from_json(std::string_view json_text);

void render_report(std::ostream& out, const PredictionReport& report);

}  // namespace hmmpath
