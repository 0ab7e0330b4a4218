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

#include "hmmpath/model.hpp"

namespace hmmpath {

// Model file format: one JSON object with keys "state_names" (array of
// strings), "observation_names" (array of strings), "initial" (array of
// numbers), "transition" and "emission" (arrays of row arrays). NaN and
// Infinity literals are rejected.

/// Parses the JSON text into an unvalidated RawModel. Throws parse_error.
RawModel parse_raw_model(std::string_view json_text);

/// parse + validate in one step.
HmmModel parse_model(std::string_view json_text);

/// Reads and validates a model file. Throws io_error when unreadable.
HmmModel load_model(const std::string& path);
RawModel load_raw_model(const std::string& path);

/// Serializes with enough digits that reading the text back reproduces
/// every double bit-for-bit.
std::string model_to_json(const RawModel& raw);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace hmmpath
