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

#include "hmmpath/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hmmpath {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_size(const HmmModel& model, const ObservationSequence& obs) {
  long long count = 1;
  for (size_t t = 0; t < obs.symbols.size(); ++t) {
    count *= model.num_states();
    if (count > kBruteForceLimit) {
      std::ostringstream msg;
      msg << "N^T = " << model.num_states() << "^" << obs.symbols.size()
          << " exceeds the enumeration limit " << kBruteForceLimit;
      throw Error(ErrorCode::too_large, msg.str());
    }
  }
}

// Advances the path odometer; returns false once all paths were visited.
bool next_path(std::vector<int>& path, int n) {
  for (int t = static_cast<int>(path.size()) - 1; t >= 0; --t) {
    if (++path[t] < n) return true;
    path[t] = 0;
  }
  return false;
}

// Viterbi resolves ties from the final step backwards, so the matching
// total order on equal-probability paths compares the last state first.
bool later_steps_smaller(const std::vector<int>& a, const std::vector<int>& b) {
  for (int t = static_cast<int>(a.size()) - 1; t >= 0; --t) {
    if (a[t] != b[t]) return a[t] < b[t];
  }
  return false;
}

}  // namespace

DecodeResult brute_force_decode(const HmmModel& model, const ObservationSequence& obs) {
  check_sequence(model, obs);
  check_size(model, obs);
  const int t_len = static_cast<int>(obs.symbols.size());

  std::vector<int> path(t_len, 0);
  std::vector<int> best_path;
  double best = kNegInf;
  do {
    // Accumulation order mirrors the decoder's recurrence so that equal
    // paths produce bit-identical scores in both implementations.
    double lp = model.log_initial(path[0]) + model.log_emission(path[0], obs.symbols[0]);
    for (int t = 1; t < t_len; ++t) {
      lp += model.log_transition(path[t - 1], path[t]);
      lp += model.log_emission(path[t], obs.symbols[t]);
    }
    if (best_path.empty() || lp > best ||
        (lp == best && later_steps_smaller(path, best_path))) {
      best = lp;
      best_path = path;
    }
  } while (next_path(path, model.num_states()));

  if (best == kNegInf)
    throw Error(ErrorCode::no_viable_path,
                "every state path has probability zero for this observation sequence");

  DecodeResult result;
  result.path = std::move(best_path);
  result.log_probability = best;
  return result;
}

double brute_force_likelihood(const HmmModel& model, const ObservationSequence& obs) {
  check_sequence(model, obs);
  check_size(model, obs);
  const int t_len = static_cast<int>(obs.symbols.size());

  std::vector<int> path(t_len, 0);
  double sum = 0.0, comp = 0.0;  // Kahan
  do {
    double p = model.initial(path[0]) * model.emission(path[0], obs.symbols[0]);
    for (int t = 1; t < t_len; ++t) {
      p *= model.transition(path[t - 1], path[t]);
      p *= model.emission(path[t], obs.symbols[t]);
    }
    const double y = p - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  } while (next_path(path, model.num_states()));
  return sum;
}

}  // namespace hmmpath
