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

#include "hmmpath/decode.hpp"
#include "hmmpath/model.hpp"

namespace hmmpath {

// Exhaustive-enumeration reference implementations. They share nothing with
// the dynamic-programming code paths and exist so the decoder and the
// forward pass can be checked against ground truth on small inputs.
// Both refuse to run when N^T exceeds kBruteForceLimit.

constexpr long long kBruteForceLimit = 10'000'000;

/// Enumerates all N^T state paths and returns the most probable one, with
/// the same lowest-index tie-breaking the Viterbi decoder applies at each
/// step. Path and log-probability are comparable to viterbi_decode
/// bit-for-bit up to 1e-9 absolute; backpointers are left empty.
/// Throws too_large, symbol_out_of_range, empty_input, no_viable_path.
DecodeResult brute_force_decode(const HmmModel& model, const ObservationSequence& obs);

/// Exact sum of the joint probability over all enumerated paths, in plain
/// probability space with compensated summation. Throws too_large,
/// symbol_out_of_range, empty_input.
double brute_force_likelihood(const HmmModel& model, const ObservationSequence& obs);

}  // namespace hmmpath
