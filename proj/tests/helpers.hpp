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
#include <random>
#include <string>
#include <vector>

#include "hmmpath/error.hpp"
#include "hmmpath/model.hpp"

namespace hmmpath_test {

inline hmmpath::RawModel raw_model(std::vector<double> initial, hmmpath::Matrix transition,
                                   hmmpath::Matrix emission) {
  hmmpath::RawModel raw;
  for (size_t i = 0; i < initial.size(); ++i) raw.state_names.push_back("S" + std::to_string(i + 1));
  const size_t m = emission.empty() ? 0 : emission[0].size();
  for (size_t k = 0; k < m; ++k) raw.observation_names.push_back("O" + std::to_string(k + 1));
  raw.initial = std::move(initial);
  raw.transition = std::move(transition);
  raw.emission = std::move(emission);
  return raw;
}

inline hmmpath::HmmModel make_model(std::vector<double> initial, hmmpath::Matrix transition,
                                    hmmpath::Matrix emission) {
  return hmmpath::validate_model(raw_model(std::move(initial), std::move(transition),
                                           std::move(emission)));
}

/// Runs f and reports the hmmpath error code it threw, if any.
template <typename F>
std::optional<hmmpath::ErrorCode> thrown_code(F&& f) {
  try {
    f();
    return std::nullopt;
  } catch (const hmmpath::Error& e) {
    return e.code();
  }
}

template <typename F>
std::string thrown_message(F&& f) {
  try {
    f();
    return {};
  } catch (const hmmpath::Error& e) {
    return e.what();
  }
}

/// Random row-stochastic model generator for property tests. Three row
/// flavors: dense (all entries positive), sparse (some exact zeros) and
/// quantized (small-integer ratios, which makes exact probability ties
/// common and exercises the tie-breaking contract).
class ModelGen {
 public:
  explicit ModelGen(std::uint64_t seed) : rng_(seed) {}

  enum class Flavor { dense, sparse, quantized };

  hmmpath::HmmModel model(int num_states, int num_observations, Flavor flavor) {
    hmmpath::Matrix transition, emission;
    for (int i = 0; i < num_states; ++i) transition.push_back(row(num_states, flavor));
    for (int i = 0; i < num_states; ++i) emission.push_back(row(num_observations, flavor));
    return make_model(row(num_states, flavor), std::move(transition), std::move(emission));
  }

  std::vector<int> observations(int length, int num_observations) {
    std::uniform_int_distribution<int> dist(0, num_observations - 1);
    std::vector<int> obs(length);
    for (int& o : obs) o = dist(rng_);
    return obs;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::vector<double> row(int width, Flavor flavor) {
    std::vector<double> r(width, 0.0);
    switch (flavor) {
      case Flavor::dense: {
        std::uniform_real_distribution<double> dist(0.05, 1.0);
        for (double& v : r) v = dist(rng_);
        break;
      }
      case Flavor::sparse: {
        std::uniform_real_distribution<double> dist(0.05, 1.0);
        std::bernoulli_distribution zero(0.35);
        for (double& v : r) v = zero(rng_) ? 0.0 : dist(rng_);
        r[std::uniform_int_distribution<int>(0, width - 1)(rng_)] =
            std::max(dist(rng_), 0.05);
        break;
      }
      case Flavor::quantized: {
        std::uniform_int_distribution<int> dist(0, 3);
        for (double& v : r) v = dist(rng_);
        bool any = false;
        for (double v : r) any = any || v > 0;
        if (!any) r[std::uniform_int_distribution<int>(0, width - 1)(rng_)] = 1.0;
        break;
      }
    }
    double sum = 0.0;
    for (double v : r) sum += v;
    for (double& v : r) v /= sum;
    return r;
  }

  std::mt19937_64 rng_;
};

}  // namespace hmmpath_test
