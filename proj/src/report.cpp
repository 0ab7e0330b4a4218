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

#include "hmmpath/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace hmmpath {

namespace {
using nlohmann::json;
}

PredictionReport make_report(const HmmModel& model, const ObservationSequence& obs,
                             const DecodeResult& decoded, const AttackMatch& verdict,
                             std::optional<int> skipped_records) {
  PredictionReport report;
  report.observations = obs.symbols;
  for (const int sym : obs.symbols)
    report.observation_labels.push_back(model.observation_names()[sym]);
  report.path = decoded.path;
  for (const int state : decoded.path)
    report.state_labels.push_back(model.state_names()[state]);
  report.log_probability = decoded.log_probability;
  report.verdict = verdict;
  report.skipped_records = skipped_records;
  report.backpointers = decoded.backpointers;
  return report;
}

std::string report_to_json(const PredictionReport& report) {
  json j;
  j["observations"] = report.observations;
  j["observation_labels"] = report.observation_labels;
  j["path"] = report.path;
  j["state_labels"] = report.state_labels;
  j["log_probability"] = report.log_probability;
  j["verdict"] = {
      {"matched_type", report.verdict.matched_type ? json(*report.verdict.matched_type) : json()},
      {"similarity", report.verdict.similarity},
      {"kind", to_string(report.verdict.kind)},
  };
  j["skipped_records"] = report.skipped_records ? json(*report.skipped_records) : json();
  j["backpointers"] = report.backpointers;
  return j.dump(2) + "\n";
}

PredictionReport report_from_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  try {
    PredictionReport report;
    report.observations = j.at("observations").get<std::vector<int>>();
    report.observation_labels = j.at("observation_labels").get<std::vector<std::string>>();
    report.path = j.at("path").get<std::vector<int>>();
    report.state_labels = j.at("state_labels").get<std::vector<std::string>>();
    report.log_probability = j.at("log_probability").get<double>();
    const json& verdict = j.at("verdict");
    if (!verdict.at("matched_type").is_null())
      report.verdict.matched_type = verdict.at("matched_type").get<std::string>();
    report.verdict.similarity = verdict.at("similarity").get<double>();
    const auto kind = match_kind_from_string(verdict.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorCode::parse_error, "unknown verdict kind");
    report.verdict.kind = *kind;
    if (!j.at("skipped_records").is_null())
      report.skipped_records = j.at("skipped_records").get<int>();
    report.backpointers = j.at("backpointers").get<std::vector<std::vector<int>>>();
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

void render_report(std::ostream& out, const PredictionReport& report) {
  out << "step  observation" << std::setw(53) << "" << "state\n";
  for (size_t t = 0; t < report.observations.size(); ++t) {
    std::ostringstream obs_label;
    obs_label << "[" << report.observations[t] << "] " << report.observation_labels[t];
    out << std::left << std::setw(6) << t + 1 << std::setw(64) << obs_label.str() << "["
        << report.path[t] << "] " << report.state_labels[t] << "\n";
  }

  std::ostringstream obs_line, path_line;
  for (size_t t = 0; t < report.observations.size(); ++t) {
    if (t) {
      obs_line << " -> ";
      path_line << " -> ";
    }
    obs_line << short_label(report.observation_labels[t]);
    path_line << short_label(report.state_labels[t]);
  }
  out << "\nobservations   : " << obs_line.str() << "\n";
  out << "decoded path   : " << path_line.str() << "\n";
  out << "log probability: " << std::setprecision(12) << report.log_probability << "\n";

  out << "verdict        : ";
  switch (report.verdict.kind) {
    case MatchKind::exact:
      out << *report.verdict.matched_type << " (exact match)";
      break;
    case MatchKind::nearest:
      out << *report.verdict.matched_type << " (nearest, similarity "
          << std::setprecision(3) << report.verdict.similarity << ")";
      break;
    case MatchKind::no_match:
      out << "no known attack type (best similarity " << std::setprecision(3)
          << report.verdict.similarity << ")";
      break;
  }
  out << "\n";
  if (report.skipped_records)
    out << "skipped records: " << *report.skipped_records << "\n";

  if (!report.backpointers.empty()) {
    out << "\nbackpointer audit (rows = steps, columns = states, entry = best predecessor):\n";
    for (size_t t = 0; t < report.backpointers.size(); ++t) {
      out << "  t=" << std::left << std::setw(4) << t + 1;
      for (const int b : report.backpointers[t]) out << std::setw(3) << b;
      out << "\n";
    }
  }
}

}  // namespace hmmpath
