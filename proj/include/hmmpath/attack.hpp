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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmmpath/decode.hpp"
#include "hmmpath/model.hpp"

namespace hmmpath {

/// A named canonical attack path: the hidden-state flow of one attack type
/// together with the observation sequence a victim would see.
struct AttackSignature {
  std::string name;
  std::vector<int> canonical_path;          // state indices
  std::vector<int> canonical_observations;  // observation indices

  bool operator==(const AttackSignature&) const = default;
};

enum class MatchKind { exact, nearest, no_match };

const char* to_string(MatchKind kind) noexcept;
std::optional<MatchKind> match_kind_from_string(std::string_view s) noexcept;

/// Verdict of classifying a decoded path against a signature library.
struct AttackMatch {
  std::optional<std::string> matched_type;  // empty on no_match
  double similarity = 0.0;                  // in [0,1], 1.0 = exact
  MatchKind kind = MatchKind::no_match;

  bool operator==(const AttackMatch&) const = default;
};

// A candidate counts as "nearest" only when its LCS similarity reaches
// this threshold; below it the verdict is no_match.
constexpr double kNearestThreshold = 0.5;

/// Length of the longest common subsequence (classic quadratic DP).
std::size_t lcs_length(std::span<const int> a, std::span<const int> b);

/// Classifies a decoded path. An exact canonical-path match wins outright;
/// otherwise each signature is scored as |LCS| / max(|path|, |canonical|)
/// and the best one is returned as nearest when it reaches the threshold,
/// ties going to the earlier signature. Throws empty_input when the path
/// or the signature list is empty.
AttackMatch match_attack_type(std::span<const int> path,
                              std::span<const AttackSignature> signatures);

/// The built-in 11-state / 13-observation Action Spoofing model. States are
/// the attacker-side stages, observations the victim-visible events. The
/// probability values are authored here under these constraints: the
/// installed-malware state gets the strictly largest initial probability,
/// its five possible successor stages are equally likely, every row is
/// stochastic, and emissions are the sparsest assignment consistent with
/// the five canonical attack flows. Decoding each signature's observation
/// sequence reproduces its canonical path (enforced by the test suite
/// against the exhaustive oracle).
HmmModel reference_model();

/// The five Action Spoofing signatures, in library row order:
/// Clickjacking, Tapjacking, Scheme Squatting, Task Impersonation,
/// Activity Hijack.
const std::vector<AttackSignature>& reference_signatures();

/// Signature file format: JSON array of {"name": string, "path": [state
/// indices], "observations": [observation indices]}. The loader checks
/// index ranges against the model, equal path/observation lengths, and
/// that all signatures share one start and one end state.
std::vector<AttackSignature> parse_signatures(std::string_view json_text, const HmmModel& model);
std::vector<AttackSignature> load_signatures(const std::string& path, const HmmModel& model);
std::string signatures_to_json(std::span<const AttackSignature> signatures);

/// One row of a signature-replay run: decode the signature's observations
/// and compare against its canonical path and type.
struct ReproduceRow {
  std::string attack_type;
  std::vector<int> observations;
  std::vector<int> expected_path;
  std::vector<int> decoded_path;  // empty when decoding failed
  bool path_matches = false;
  bool exact_verdict = false;
  std::string note;  // error text when decoding failed

  bool ok() const { return path_matches && exact_verdict; }
};

/// Replays every signature through the decoder + matcher. Throws
/// empty_input when the signature list is empty; per-row decode failures
/// are recorded in the row rather than thrown.
std::vector<ReproduceRow> reproduce_signatures(const HmmModel& model,
                                               std::span<const AttackSignature> signatures);

}  // namespace hmmpath
