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

#include <vector>

#include "hmmpath/model.hpp"

namespace hmmpath {

/// Output of a Viterbi decode: the single most probable hidden-state path
/// for an observation sequence, its log joint probability, and the
/// backpointer table kept for audit output.
struct DecodeResult {
  std::vector<int> path;   // length T, state index per time step
  double log_probability;  // ln P(path, observations | model)

  // backpointers[t][j] is the predecessor state that maximized the score of
  // ending in state j at time t. Row 0 is all zeros by convention (no
  // predecessor at the first step). Brute-force decoding leaves this empty.
  std::vector<std::vector<int>> backpointers;

  bool operator==(const DecodeResult&) const = default;
};

/// Viterbi decoding in log space.
///
/// Maximizes P(states, observations | model) over all N^T state sequences
/// via the standard dynamic-programming recursion. All arithmetic is on
/// natural logs with log(0) = -infinity, so long sequences cannot
/// underflow. Every argmax breaks ties toward the lowest state index,
/// which makes the result deterministic and lets the brute-force oracle
/// reproduce it exactly.
///
/// Throws symbol_out_of_range, empty_input, or no_viable_path when every
/// length-T path has probability zero (the sequence is inconsistent with
/// the model; callers should treat that as a signal, not pick a path).
DecodeResult viterbi_decode(const HmmModel& model, const ObservationSequence& obs);

struct Likelihood {
  double probability;      // P(observations | model)
  double log_probability;  // ln of the above, -infinity when zero
};

/// Total probability of the observation sequence, summed over all hidden
/// paths by the forward recursion. Computed in log space with a max-shifted
/// log-sum-exp at each step. Throws symbol_out_of_range or empty_input;
/// an impossible sequence yields probability 0 rather than an error.
Likelihood forward_likelihood(const HmmModel& model, const ObservationSequence& obs);

}  // namespace hmmpath
