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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "helpers.hpp"
#include "hmmpath/attack.hpp"
#include "hmmpath/decode.hpp"
#include "hmmpath/oracle.hpp"

using namespace hmmpath;
using hmmpath_test::make_model;
using hmmpath_test::ModelGen;
using hmmpath_test::thrown_code;

namespace {

struct Case {
  HmmModel model;
  ObservationSequence obs;
};

// Randomized domain shared by the equivalence suites: N <= 5, M <= 4,
// T <= 6, rows stochastic by construction. Flavors rotate so that exact
// zeros (sparse) and exact probability ties (quantized) both occur.
std::vector<Case> random_cases(std::uint64_t seed, int count) {
  ModelGen gen(seed);
  std::vector<Case> cases;
  const ModelGen::Flavor flavors[] = {ModelGen::Flavor::dense, ModelGen::Flavor::sparse,
                                      ModelGen::Flavor::quantized};
  for (int c = 0; c < count; ++c) {
    const int n = gen.uniform(1, 5);
    const int m = gen.uniform(1, 4);
    const int t_len = gen.uniform(1, 6);
    const ModelGen::Flavor flavor = flavors[c % 3];
    cases.push_back({gen.model(n, m, flavor), {gen.observations(t_len, m), {}}});
  }
  return cases;
}

}  // namespace

TEST_CASE("viterbi agrees with the exhaustive oracle on 150 random models") {
  int viable = 0, unviable = 0;
  for (const Case& c : random_cases(20260811, 150)) {
    DecodeResult fast{}, slow{};
    const auto fast_code = thrown_code([&] { fast = viterbi_decode(c.model, c.obs); });
    const auto slow_code = thrown_code([&] { slow = brute_force_decode(c.model, c.obs); });
    REQUIRE(fast_code == slow_code);  // no_viable_path iff the true maximum is zero
    if (fast_code.has_value()) {
      CHECK(fast_code == ErrorCode::no_viable_path);
      ++unviable;
      continue;
    }
    ++viable;
    CHECK(fast.path == slow.path);
    CHECK(std::abs(fast.log_probability - slow.log_probability) <= 1e-9);
  }
  CHECK(viable >= 100);  // the sparse flavor must not drown the suite
  CHECK(unviable >= 1);
}

TEST_CASE("forward likelihood agrees with the exhaustive sum on 150 random models") {
  for (const Case& c : random_cases(4711, 150)) {
    const double exact = brute_force_likelihood(c.model, c.obs);
    const Likelihood lik = forward_likelihood(c.model, c.obs);
    if (exact == 0.0) {
      CHECK(lik.probability == 0.0);
    } else {
      CHECK(std::abs(lik.probability - exact) <= 1e-12 * exact);
    }
  }
}

TEST_CASE("max over paths never exceeds the sum over paths") {
  for (const Case& c : random_cases(991, 150)) {
    const Likelihood lik = forward_likelihood(c.model, c.obs);
    DecodeResult decoded{};
    const auto code = thrown_code([&] { decoded = viterbi_decode(c.model, c.obs); });
    if (code.has_value()) {
      CHECK(lik.probability == 0.0);
      continue;
    }
    CHECK(std::exp(decoded.log_probability) <= lik.probability + 1e-12);
  }
}

TEST_CASE("decoding is deterministic") {
  for (const Case& c : random_cases(5555, 30)) {
    DecodeResult a{}, b{};
    const auto code_a = thrown_code([&] { a = viterbi_decode(c.model, c.obs); });
    const auto code_b = thrown_code([&] { b = viterbi_decode(c.model, c.obs); });
    CHECK(code_a == code_b);
    CHECK(a == b);
  }
}

TEST_CASE("relabeling states by a permutation relabels the decoded path") {
  ModelGen gen(60309);
  int tested = 0;
  while (tested < 100) {
    const int n = gen.uniform(2, 5);
    const int m = gen.uniform(2, 4);
    const int t_len = gen.uniform(2, 5);
    const HmmModel model = gen.model(n, m, ModelGen::Flavor::dense);
    const ObservationSequence obs{gen.observations(t_len, m), {}};

    // Skip draws where the best path is not unique by a clear margin;
    // tie-breaking is index-dependent and not permutation-equivariant.
    std::vector<double> scores;
    {
      std::vector<int> path(t_len, 0);
      while (true) {
        double lp = model.log_initial(path[0]) + model.log_emission(path[0], obs.symbols[0]);
        for (int t = 1; t < t_len; ++t)
          lp += model.log_transition(path[t - 1], path[t]) +
                model.log_emission(path[t], obs.symbols[t]);
        scores.push_back(lp);
        int t = t_len - 1;
        for (; t >= 0; --t) {
          if (++path[t] < n) break;
          path[t] = 0;
        }
        if (t < 0) break;
      }
    }
    std::ranges::sort(scores, std::greater<>());
    if (scores.size() >= 2 && scores[0] - scores[1] <= 1e-9) continue;
    ++tested;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::ranges::shuffle(perm, gen.rng());

    RawModel permuted = model.raw();
    for (int i = 0; i < n; ++i) {
      permuted.initial[perm[i]] = model.initial(i);
      permuted.emission[perm[i]] = model.raw().emission[i];
      for (int j = 0; j < n; ++j) permuted.transition[perm[i]][perm[j]] = model.transition(i, j);
    }

    const DecodeResult base = viterbi_decode(model, obs);
    const DecodeResult mapped = viterbi_decode(validate_model(permuted), obs);
    REQUIRE(base.path.size() == mapped.path.size());
    for (size_t t = 0; t < base.path.size(); ++t)
      CHECK(mapped.path[t] == perm[base.path[t]]);
  }
}

TEST_CASE("brute force matches viterbi on a single-state model") {
  const HmmModel model = make_model({1.0}, {{1.0}}, {{0.3, 0.7}});
  const ObservationSequence obs{{1, 0, 1}, {}};
  const DecodeResult fast = viterbi_decode(model, obs);
  const DecodeResult slow = brute_force_decode(model, obs);
  CHECK(slow.path == fast.path);
  CHECK(slow.log_probability == fast.log_probability);
  CHECK(slow.backpointers.empty());
}

TEST_CASE("brute force two-state one-step comparison") {
  const HmmModel model =
      make_model({0.3, 0.7}, {{1.0, 0.0}, {0.0, 1.0}}, {{0.9, 0.1}, {0.2, 0.8}});
  const DecodeResult result = brute_force_decode(model, {{0}, {}});
  CHECK(result.path == std::vector<int>{0});
  CHECK(std::exp(result.log_probability) == doctest::Approx(0.27).epsilon(1e-12));
}

TEST_CASE("brute force reproduces the tapjacking attack path") {
  const DecodeResult result = brute_force_decode(reference_model(), {{0, 4, 5, 3}, {}});
  CHECK(result.path == std::vector<int>{0, 5, 9, 10});
}

TEST_CASE("exact ties resolve from the final step backwards in both implementations") {
  // Two equally probable paths exist: S1->S2 and S2->S1. The decoder picks
  // the lowest final state first, so the winner is S2->S1, not the
  // lexicographically smaller S1->S2.
  const HmmModel model =
      make_model({0.5, 0.5}, {{0.0, 1.0}, {1.0, 0.0}}, {{0.5, 0.5}, {0.5, 0.5}});
  const ObservationSequence obs{{0, 0}, {}};
  const DecodeResult fast = viterbi_decode(model, obs);
  const DecodeResult slow = brute_force_decode(model, obs);
  CHECK(fast.path == std::vector<int>{1, 0});
  CHECK(slow.path == fast.path);
  CHECK(slow.log_probability == fast.log_probability);
}

TEST_CASE("a fully uniform model decodes to the all-lowest-index path") {
  const HmmModel model = make_model(
      {1.0 / 3, 1.0 / 3, 1.0 / 3},
      {{1.0 / 3, 1.0 / 3, 1.0 / 3}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, {1.0 / 3, 1.0 / 3, 1.0 / 3}},
      {{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}});
  const ObservationSequence obs{{0, 1, 0, 1}, {}};
  const DecodeResult fast = viterbi_decode(model, obs);
  CHECK(fast.path == std::vector<int>{0, 0, 0, 0});
  CHECK(brute_force_decode(model, obs).path == fast.path);
}

TEST_CASE("brute-force likelihood trivial cases") {
  const HmmModel chain = make_model({1.0}, {{1.0}}, {{0.25, 0.75}});
  CHECK(brute_force_likelihood(chain, {{1, 1, 0}, {}}) ==
        doctest::Approx(0.75 * 0.75 * 0.25).epsilon(1e-12));

  const HmmModel uniform =
      make_model({0.5, 0.5}, {{0.5, 0.5}, {0.5, 0.5}}, {{0.5, 0.5}, {0.5, 0.5}});
  for (int t_len = 1; t_len <= 6; ++t_len) {
    const ObservationSequence obs{std::vector<int>(t_len, 1), {}};
    CHECK(brute_force_likelihood(uniform, obs) ==
          doctest::Approx(std::pow(0.5, t_len)).epsilon(1e-12));
  }
}

TEST_CASE("the enumeration guard rejects oversized inputs") {
  ModelGen gen(7);
  const HmmModel model = gen.model(5, 3, ModelGen::Flavor::dense);
  // 5^11 > 10^7
  const ObservationSequence obs{std::vector<int>(11, 0), {}};
  CHECK(thrown_code([&] { brute_force_decode(model, obs); }) == ErrorCode::too_large);
  CHECK(thrown_code([&] { brute_force_likelihood(model, obs); }) == ErrorCode::too_large);
}
