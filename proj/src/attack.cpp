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

#include "hmmpath/attack.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hmmpath/model_io.hpp"

namespace hmmpath {

namespace {

// State and observation indices of the Action Spoofing model.
enum State : int { S1, S2, S3, S4, S5, S6, S7, S8, S9, S10, S11 };
enum Obs : int { O1, O2, O3, O4, O5, O6, O7, O8, O9, O10, O11, O12, O13 };

constexpr int kNumStates = 11;
constexpr int kNumObs = 13;

RawModel build_reference_raw() {
  RawModel raw;
  raw.state_names = {
      "S1: Installed malicious s/w",
      "S2: Flash App Overlay",
      "S3: URL scheme registering",
      "S4: Implicit intent interception",
      "S5: Query legit task list",
      "S6: Toast Window overlay",
      "S7: Message interception",
      "S8: Launches new task",
      "S9: Mimics trusted UI",
      "S10: User tricked",
      "S11: Sensitive data obtained",
  };
  raw.observation_names = {
      "O1: User logged in",
      "O2: Receives email link (malicious)",
      "O3: Visits Web page; clicks on overlay button",
      "O4: Unauthorized account transaction",
      "O5: Opens malicious app",
      "O6: Toast window pops up; taps on button",
      "O7: Malicious app running in background",
      "O8: Clicks on unregistered URL for uninstalled Bank App",
      "O9: Sign-In look-alike page open on foreground",
      "O10: Enters card details",
      "O11: Launches new Bank App task",
      "O12: Launches legit charity App",
      "O13: Selects Bank App from options",
  };

  // Every attack in the family starts from pre-installed malware, so S1
  // carries half of the initial mass and the rest is spread evenly.
  raw.initial.assign(kNumStates, 0.05);
  raw.initial[S1] = 0.5;

  raw.transition.assign(kNumStates, std::vector<double>(kNumStates, 0.0));
  // The five family branches are equally likely out of S1; all later
  // stages advance deterministically toward the shared goal states.
  for (int j = S2; j <= S6; ++j) raw.transition[S1][j] = 0.2;
  raw.transition[S2][S10] = 1.0;
  raw.transition[S3][S7] = 1.0;
  raw.transition[S4][S9] = 1.0;
  raw.transition[S5][S8] = 1.0;
  raw.transition[S6][S10] = 1.0;
  raw.transition[S7][S9] = 1.0;
  raw.transition[S8][S9] = 1.0;
  raw.transition[S9][S10] = 1.0;
  raw.transition[S10][S11] = 1.0;
  raw.transition[S11][S11] = 1.0;  // terminal stage, absorbing

  raw.emission.assign(kNumStates, std::vector<double>(kNumObs, 0.0));
  raw.emission[S1][O1] = 0.5;
  raw.emission[S1][O7] = 0.5;
  raw.emission[S2][O2] = 1.0;
  raw.emission[S3][O8] = 1.0;
  raw.emission[S4][O12] = 1.0;
  raw.emission[S5][O11] = 1.0;
  raw.emission[S6][O5] = 1.0;
  raw.emission[S7][O9] = 1.0;
  raw.emission[S8][O9] = 1.0;
  raw.emission[S9][O1] = 0.5;
  raw.emission[S9][O13] = 0.5;
  raw.emission[S10][O3] = 1.0 / 3.0;
  raw.emission[S10][O6] = 1.0 / 3.0;
  raw.emission[S10][O10] = 1.0 / 3.0;
  raw.emission[S11][O4] = 1.0;
  return raw;
}

}  // namespace

HmmModel reference_model() {
  static const HmmModel model = validate_model(build_reference_raw());
  return model;
}

const std::vector<AttackSignature>& reference_signatures() {
  static const std::vector<AttackSignature> sigs = {
      {"Clickjacking", {S1, S2, S10, S11}, {O1, O2, O3, O4}},
      {"Tapjacking", {S1, S6, S10, S11}, {O1, O5, O6, O4}},
      {"Scheme Squatting", {S1, S3, S7, S9, S10, S11}, {O7, O8, O9, O1, O10, O4}},
      {"Task Impersonation", {S1, S5, S8, S9, S10, S11}, {O7, O11, O9, O1, O10, O4}},
      {"Activity Hijack", {S1, S4, S9, S10, S11}, {O7, O12, O13, O10, O4}},
  };
  return sigs;
}

std::size_t lcs_length(std::span<const int> a, std::span<const int> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

AttackMatch match_attack_type(std::span<const int> path,
                              std::span<const AttackSignature> signatures) {
  if (path.empty()) throw Error(ErrorCode::empty_input, "path is empty");
  if (signatures.empty()) throw Error(ErrorCode::empty_input, "signature list is empty");

  for (const AttackSignature& sig : signatures) {
    if (std::ranges::equal(path, sig.canonical_path))
      return {sig.name, 1.0, MatchKind::exact};
  }

  double best = -1.0;
  const AttackSignature* best_sig = nullptr;
  for (const AttackSignature& sig : signatures) {
    const std::size_t lcs = lcs_length(path, sig.canonical_path);
    const double sim =
        static_cast<double>(lcs) / static_cast<double>(std::max(path.size(), sig.canonical_path.size()));
    if (sim > best) {  // strict >, so earlier signatures win ties
      best = sim;
      best_sig = &sig;
    }
  }
  if (best >= kNearestThreshold) return {best_sig->name, best, MatchKind::nearest};
  return {std::nullopt, best, MatchKind::no_match};
}

const char* to_string(MatchKind kind) noexcept {
  switch (kind) {
    case MatchKind::exact: return "exact";
    case MatchKind::nearest: return "nearest";
    case MatchKind::no_match: return "no_match";
  }
  return "no_match";
}

std::optional<MatchKind> match_kind_from_string(std::string_view s) noexcept {
  if (s == "exact") return MatchKind::exact;
  if (s == "nearest") return MatchKind::nearest;
  if (s == "no_match") return MatchKind::no_match;
  return std::nullopt;
}

std::vector<AttackSignature> parse_signatures(std::string_view json_text, const HmmModel& model) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  if (!j.is_array())
    throw Error(ErrorCode::parse_error, "signature document is not a JSON array");
  if (j.empty()) throw Error(ErrorCode::empty_input, "signature list is empty");

  std::vector<AttackSignature> sigs;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("name") || !item.contains("path") ||
        !item.contains("observations"))
      throw Error(ErrorCode::parse_error,
                  "each signature needs \"name\", \"path\" and \"observations\"");
    AttackSignature sig;
    sig.name = item["name"].get<std::string>();
    for (const auto& v : item["path"]) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::parse_error, "non-integer state index in \"" + sig.name + "\"");
      const int s = v.get<int>();
      if (s < 0 || s >= model.num_states())
        throw Error(ErrorCode::parse_error,
                    "state index " + std::to_string(s) + " out of range in \"" + sig.name + "\"");
      sig.canonical_path.push_back(s);
    }
    for (const auto& v : item["observations"]) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::parse_error,
                    "non-integer observation index in \"" + sig.name + "\"");
      const int o = v.get<int>();
      if (o < 0 || o >= model.num_observations())
        throw Error(ErrorCode::parse_error, "observation index " + std::to_string(o) +
                                                " out of range in \"" + sig.name + "\"");
      sig.canonical_observations.push_back(o);
    }
    if (sig.canonical_path.size() != sig.canonical_observations.size())
      throw Error(ErrorCode::parse_error,
                  "\"" + sig.name + "\": path and observations differ in length");
    if (sig.canonical_path.empty())
      throw Error(ErrorCode::parse_error, "\"" + sig.name + "\": empty path");
    sigs.push_back(std::move(sig));
  }

  // All attack types in one family share the entry and goal stages.
  for (const AttackSignature& sig : sigs) {
    if (sig.canonical_path.front() != sigs.front().canonical_path.front() ||
        sig.canonical_path.back() != sigs.front().canonical_path.back())
      throw Error(ErrorCode::parse_error,
                  "\"" + sig.name + "\" does not share the family start/end states");
  }
  return sigs;
}

std::vector<AttackSignature> load_signatures(const std::string& path, const HmmModel& model) {
  return parse_signatures(read_file(path), model);
}

std::string signatures_to_json(std::span<const AttackSignature> signatures) {
  std::string out = "[\n";
  for (size_t i = 0; i < signatures.size(); ++i) {
    const nlohmann::json row = {{"name", signatures[i].name},
                                {"path", signatures[i].canonical_path},
                                {"observations", signatures[i].canonical_observations}};
    out += "  " + row.dump();
    out += i + 1 < signatures.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::vector<ReproduceRow> reproduce_signatures(const HmmModel& model,
                                               std::span<const AttackSignature> signatures) {
  if (signatures.empty()) throw Error(ErrorCode::empty_input, "signature list is empty");

  std::vector<ReproduceRow> rows;
  for (const AttackSignature& sig : signatures) {
    ReproduceRow row;
    row.attack_type = sig.name;
    row.observations = sig.canonical_observations;
    row.expected_path = sig.canonical_path;
    try {
      const DecodeResult decoded = viterbi_decode(model, {sig.canonical_observations, {}});
      row.decoded_path = decoded.path;
      row.path_matches = decoded.path == sig.canonical_path;
      const AttackMatch match = match_attack_type(decoded.path, signatures);
      row.exact_verdict = match.kind == MatchKind::exact && match.matched_type == sig.name;
    } catch (const Error& e) {
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hmmpath
