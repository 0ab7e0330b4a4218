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

#include "hmmpath/model.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace hmmpath {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_or_neg_inf(double p) { return p > 0.0 ? std::log(p) : kNegInf; }

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

void check_row(const std::vector<double>& row, const std::string& what, int index) {
  double sum = 0.0;
  for (size_t k = 0; k < row.size(); ++k) {
    if (std::isnan(row[k]) || std::isinf(row[k])) {
      std::ostringstream msg;
      msg << what << " row " << index << " entry " << k << " is not finite";
      throw Error(ErrorCode::parse_error, msg.str());
    }
    if (row[k] < 0.0) {
      std::ostringstream msg;
      msg << what << " row " << index << " entry " << k << " is negative (" << row[k] << ")";
      throw Error(ErrorCode::negative_entry, msg.str());
    }
    sum += row[k];
  }
  if (std::abs(sum - 1.0) > HmmModel::kRowSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " row " << index << " sums to " << sum << ", expected 1";
    throw Error(ErrorCode::not_stochastic, msg.str());
  }
}

int find_label(const std::vector<std::string>& names, std::string_view label) {
  const std::string want = lower(trim(label));
  if (want.empty()) return -1;
  for (size_t i = 0; i < names.size(); ++i) {
    const std::string full = lower(trim(names[i]));
    if (full == want) return static_cast<int>(i);
    const size_t colon = full.find(':');
    if (colon != std::string::npos && trim(full.substr(0, colon)) == want)
      return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

HmmModel validate_model(const RawModel& raw) {
  const size_t n = raw.state_names.size();
  const size_t m = raw.observation_names.size();
  if (n == 0 || m == 0)
    throw Error(ErrorCode::empty_model, "model must have at least one state and one observation");

  if (raw.initial.size() != n) {
    std::ostringstream msg;
    msg << "initial vector has length " << raw.initial.size() << ", expected " << n;
    throw Error(ErrorCode::dimension_mismatch, msg.str());
  }
  if (raw.transition.size() != n) {
    std::ostringstream msg;
    msg << "transition matrix has " << raw.transition.size() << " rows, expected " << n;
    throw Error(ErrorCode::dimension_mismatch, msg.str());
  }
  if (raw.emission.size() != n) {
    std::ostringstream msg;
    msg << "emission matrix has " << raw.emission.size() << " rows, expected " << n;
    throw Error(ErrorCode::dimension_mismatch, msg.str());
  }
  for (size_t i = 0; i < n; ++i) {
    if (raw.transition[i].size() != n) {
      std::ostringstream msg;
      msg << "transition row " << i << " has " << raw.transition[i].size()
          << " columns, expected " << n;
      throw Error(ErrorCode::dimension_mismatch, msg.str());
    }
    if (raw.emission[i].size() != m) {
      std::ostringstream msg;
      msg << "emission row " << i << " has " << raw.emission[i].size()
          << " columns, expected " << m;
      throw Error(ErrorCode::dimension_mismatch, msg.str());
    }
  }

  check_row(raw.initial, "initial", 0);
  for (size_t i = 0; i < n; ++i) check_row(raw.transition[i], "transition", static_cast<int>(i));
  for (size_t i = 0; i < n; ++i) check_row(raw.emission[i], "emission", static_cast<int>(i));

  return HmmModel(raw);
}

HmmModel::HmmModel(RawModel raw)
    : n_(static_cast<int>(raw.state_names.size())),
      m_(static_cast<int>(raw.observation_names.size())),
      raw_(std::move(raw)) {
  log_initial_.resize(n_);
  log_transition_.assign(n_, std::vector<double>(n_));
  log_emission_.assign(n_, std::vector<double>(m_));
  for (int i = 0; i < n_; ++i) {
    log_initial_[i] = log_or_neg_inf(raw_.initial[i]);
    for (int j = 0; j < n_; ++j) log_transition_[i][j] = log_or_neg_inf(raw_.transition[i][j]);
    for (int k = 0; k < m_; ++k) log_emission_[i][k] = log_or_neg_inf(raw_.emission[i][k]);
  }
}

int HmmModel::find_observation(std::string_view label) const {
  return find_label(raw_.observation_names, label);
}

int HmmModel::find_state(std::string_view label) const {
  return find_label(raw_.state_names, label);
}

void check_sequence(const HmmModel& model, const ObservationSequence& obs) {
  if (obs.symbols.empty())
    throw Error(ErrorCode::empty_input, "observation sequence is empty");
  for (size_t t = 0; t < obs.symbols.size(); ++t) {
    const int sym = obs.symbols[t];
    if (sym < 0 || sym >= model.num_observations()) {
      std::ostringstream msg;
      msg << "symbol " << sym << " at position " << t << " outside [0, "
          << model.num_observations() << ")";
      throw Error(ErrorCode::symbol_out_of_range, msg.str());
    }
  }
}

std::string short_label(std::string_view name) {
  const size_t colon = name.find(':');
  if (colon == std::string_view::npos) return trim(name);
  return trim(name.substr(0, colon));
}

}  // namespace hmmpath
