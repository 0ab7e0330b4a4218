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

#include "hmmpath/error.hpp"

namespace hmmpath {

using Matrix = std::vector<std::vector<double>>;

/// Unvalidated model parameters as they come out of a file or a builder.
struct RawModel {
  std::vector<std::string> state_names;
  std::vector<std::string> observation_names;
  std::vector<double> initial;  // length N
  Matrix transition;            // N x N, row i = P(next state | state i)
  Matrix emission;              // N x M, row i = P(symbol | state i)
};

/// A validated discrete hidden Markov model. Immutable after construction;
/// safe to share read-only across threads. Log-space copies of all
/// parameters are precomputed, with log(0) represented as -infinity.
class HmmModel {
 public:
  // Tolerance on |row sum - 1| accepted by validate_model. Rows that are
  // off by more are rejected, never silently renormalized.
  static constexpr double kRowSumTolerance = 1e-9;

  int num_states() const noexcept { return n_; }
  int num_observations() const noexcept { return m_; }

  double initial(int i) const { return raw_.initial[i]; }
  double transition(int i, int j) const { return raw_.transition[i][j]; }
  double emission(int i, int k) const { return raw_.emission[i][k]; }

  double log_initial(int i) const { return log_initial_[i]; }
  double log_transition(int i, int j) const { return log_transition_[i][j]; }
  double log_emission(int i, int k) const { return log_emission_[i][k]; }

  const std::vector<std::string>& state_names() const noexcept {
    return raw_.state_names;
  }
  const std::vector<std::string>& observation_names() const noexcept {
    return raw_.observation_names;
  }
  const RawModel& raw() const noexcept { return raw_; }

  /// Resolves a label such as "O7", "o7" or the full observation name to
  /// its index. Labels match either the whole name or the token before the
  /// first ':' (case-insensitive). Returns -1 when nothing matches.
  int find_observation(std::string_view label) const;
  int find_state(std::string_view label) const;

 private:
  friend HmmModel validate_model(const RawModel& raw);
  explicit HmmModel(RawModel raw);

  int n_ = 0;
  int m_ = 0;
  RawModel raw_;
  std::vector<double> log_initial_;
  Matrix log_transition_;
  Matrix log_emission_;
};

/// Checks shapes, entry ranges and row-stochasticity, and returns the
/// validated immutable model. Throws Error with code dimension_mismatch,
/// not_stochastic (message names the row and its actual sum),
/// negative_entry or empty_model.
HmmModel validate_model(const RawModel& raw);

/// Where an observation symbol came from, for audit output.
struct SymbolProvenance {
  std::string source;  // file name or other origin label
  int line = 0;        // 1-based line in the source, 0 when unknown

  bool operator==(const SymbolProvenance&) const = default;
};

/// An ordered sequence of observation symbol indices, optionally annotated
/// with per-symbol provenance (empty or one entry per symbol).
struct ObservationSequence {
  std::vector<int> symbols;
  std::vector<SymbolProvenance> provenance;

  bool operator==(const ObservationSequence&) const = default;
};

/// Shared precondition check for decode/evaluate entry points: sequence
/// nonempty and every symbol within [0, num_observations).
void check_sequence(const HmmModel& model, const ObservationSequence& obs);

/// "S1: Installed malicious s/w" -> "S1". Names without ':' pass through.
std::string short_label(std::string_view name);

}  // namespace hmmpath
