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

#include "hmmpath/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hmmpath {

namespace {

using nlohmann::json;

std::vector<std::string> string_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(ErrorCode::parse_error, std::string("missing or non-array key \"") + key + "\"");
  std::vector<std::string> out;
  for (const auto& item : j[key]) {
    if (!item.is_string())
      throw Error(ErrorCode::parse_error, std::string("non-string entry in \"") + key + "\"");
    out.push_back(item.get<std::string>());
  }
  return out;
}

double number_entry(const json& item, const char* key) {
  if (!item.is_number())
    throw Error(ErrorCode::parse_error, std::string("non-numeric entry in \"") + key + "\"");
  return item.get<double>();
}

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(ErrorCode::parse_error, std::string("missing or non-array key \"") + key + "\"");
  std::vector<double> out;
  for (const auto& item : j[key]) out.push_back(number_entry(item, key));
  return out;
}

Matrix number_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(ErrorCode::parse_error, std::string("missing or non-array key \"") + key + "\"");
  Matrix out;
  for (const auto& row : j[key]) {
    if (!row.is_array())
      throw Error(ErrorCode::parse_error, std::string("non-array row in \"") + key + "\"");
    std::vector<double> r;
    for (const auto& item : row) r.push_back(number_entry(item, key));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

RawModel parse_raw_model(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  if (!j.is_object())
    throw Error(ErrorCode::parse_error, "model document is not a JSON object");

  RawModel raw;
  raw.state_names = string_array(j, "state_names");
  raw.observation_names = string_array(j, "observation_names");
  raw.initial = number_array(j, "initial");
  raw.transition = number_matrix(j, "transition");
  raw.emission = number_matrix(j, "emission");
  return raw;
}

HmmModel parse_model(std::string_view json_text) {
  return validate_model(parse_raw_model(json_text));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io_error, "failed reading " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error(ErrorCode::io_error, "failed writing " + path);
}

RawModel load_raw_model(const std::string& path) {
  return parse_raw_model(read_file(path));
}

HmmModel load_model(const std::string& path) {
  return validate_model(load_raw_model(path));
}

namespace {

// One matrix row per line keeps the file reviewable; individual numbers go
// through the JSON serializer so that parsing the text back reproduces the
// exact double.
std::string number_row(const std::vector<double>& row) {
  std::string out = "[";
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += json(row[i]).dump();
  }
  return out + "]";
}

std::string string_block(const std::vector<std::string>& names, const char* indent) {
  std::string out = "[\n";
  for (size_t i = 0; i < names.size(); ++i) {
    out += indent;
    out += "  ";
    out += json(names[i]).dump();
    out += i + 1 < names.size() ? ",\n" : "\n";
  }
  out += indent;
  return out + "]";
}

std::string matrix_block(const Matrix& rows, const char* indent) {
  std::string out = "[\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    out += indent;
    out += "  ";
    out += number_row(rows[i]);
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  out += indent;
  return out + "]";
}

}  // namespace

std::string model_to_json(const RawModel& raw) {
  std::string out = "{\n";
  out += "  \"state_names\": " + string_block(raw.state_names, "  ") + ",\n";
  out += "  \"observation_names\": " + string_block(raw.observation_names, "  ") + ",\n";
  out += "  \"initial\": " + number_row(raw.initial) + ",\n";
  out += "  \"transition\": " + matrix_block(raw.transition, "  ") + ",\n";
  out += "  \"emission\": " + matrix_block(raw.emission, "  ") + "\n";
  return out + "}\n";
}

}  // namespace hmmpath
