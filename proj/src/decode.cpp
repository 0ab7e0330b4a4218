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

#include "hmmpath/decode.hpp"

#include <cmath>
#include <limits>

namespace hmmpath {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

DecodeResult viterbi_decode(const HmmModel& model, const ObservationSequence& obs) {
  check_sequence(model, obs);
  const int n = model.num_states();
  const int t_len = static_cast<int>(obs.symbols.size());

  DecodeResult result;
  result.backpointers.assign(t_len, std::vector<int>(n, 0));

  std::vector<double> score(n), next(n);
  for (int i = 0; i < n; ++i)
    score[i] = model.log_initial(i) + model.log_emission(i, obs.symbols[0]);

  for (int t = 1; t < t_len; ++t) {
    const int sym = obs.symbols[t];
    for (int j = 0; j < n; ++j) {
      double best = kNegInf;
      int arg = 0;
      for (int i = 0; i < n; ++i) {
        // Strict > keeps the lowest predecessor index on ties.
        const double cand = score[i] + model.log_transition(i, j);
        if (cand > best) {
          best = cand;
          arg = i;
        }
      }
      next[j] = best + model.log_emission(j, sym);
      result.backpointers[t][j] = arg;
    }
    score.swap(next);
  }

  double best = kNegInf;
  int last = 0;
  for (int i = 0; i < n; ++i) {
    if (score[i] > best) {
      best = score[i];
      last = i;
    }
  }
  if (best == kNegInf)
    throw Error(ErrorCode::no_viable_path,
                "every state path has probability zero for this observation sequence");

  result.log_probability = best;
  result.path.resize(t_len);
  result.path[t_len - 1] = last;
  for (int t = t_len - 1; t > 0; --t)
    result.path[t - 1] = result.backpointers[t][result.path[t]];
  return result;
}

Likelihood forward_likelihood(const HmmModel& model, const ObservationSequence& obs) {
  check_sequence(model, obs);
  const int n = model.num_states();
  const int t_len = static_cast<int>(obs.symbols.size());

  std::vector<double> score(n), next(n);
  for (int i = 0; i < n; ++i)
    score[i] = model.log_initial(i) + model.log_emission(i, obs.symbols[0]);

  for (int t = 1; t < t_len; ++t) {
    const int sym = obs.symbols[t];
    for (int j = 0; j < n; ++j) {
      // log-sum-exp over predecessors, shifted by the max so that only
      // ratios <= 1 are exponentiated. An all -inf column stays -inf.
      double m = kNegInf;
      for (int i = 0; i < n; ++i)
        m = std::max(m, score[i] + model.log_transition(i, j));
      if (m == kNegInf) {
        next[j] = kNegInf;
        continue;
      }
      double sum = 0.0;
      for (int i = 0; i < n; ++i)
        sum += std::exp(score[i] + model.log_transition(i, j) - m);
      next[j] = m + std::log(sum) + model.log_emission(j, sym);
    }
    score.swap(next);
  }

  double m = kNegInf;
  for (int i = 0; i < n; ++i) m = std::max(m, score[i]);
  if (m == kNegInf) return {0.0, kNegInf};
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += std::exp(score[i] - m);
  const double log_p = m + std::log(sum);
  return {std::exp(log_p), log_p};
}

}  // namespace hmmpath
