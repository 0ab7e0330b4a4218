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

#include "hmmpath/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmmpath/attack.hpp"
#include "hmmpath/decode.hpp"
#include "hmmpath/ingest.hpp"
#include "hmmpath/model_io.hpp"
#include "hmmpath/report.hpp"

namespace hmmpath::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error:
    case ErrorCode::io_error:
    case ErrorCode::csv_malformed:
      return 2;
    default:
      return 1;
  }
}

bool looks_like_integer(std::string_view token) {
  size_t i = token.starts_with('-') || token.starts_with('+') ? 1 : 0;
  if (i == token.size()) return false;
  return std::all_of(token.begin() + i, token.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

std::string trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// "O1,O2,O3" or "0,1,2" (or a mix) to symbol indices. Bare integers are
// 0-based indices; anything else resolves against the model's names.
ObservationSequence parse_obs_list(const std::string& list, const HmmModel& model) {
  ObservationSequence obs;
  std::stringstream stream(list);
  std::string token;
  while (std::getline(stream, token, ',')) {
    token = trim(token);
    if (token.empty())
      throw Error(ErrorCode::parse_error, "empty observation token in \"" + list + "\"");
    if (looks_like_integer(token)) {
      try {
        obs.symbols.push_back(std::stoi(token));
      } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, "observation index \"" + token + "\" out of range");
      }
      continue;
    }
    const int idx = model.find_observation(token);
    if (idx < 0)
      throw Error(ErrorCode::parse_error, "unknown observation label \"" + token + "\"");
    obs.symbols.push_back(idx);
  }
  if (obs.symbols.empty())
    throw Error(ErrorCode::parse_error, "no observations given");
  return obs;
}

std::string index_path_to_short(const std::vector<int>& indices,
                                const std::vector<std::string>& names) {
  std::ostringstream out;
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) out << " -> ";
    out << short_label(names[indices[i]]);
  }
  return out.str();
}

struct Options {
  std::string model_path;
  std::string obs_list;
  std::string log_path;
  std::string rules_path;
  std::string signatures_path;
  std::string per_model_dir;
  bool json_output = false;
};

int cmd_validate(const Options& opt, std::ostream& out) {
  const HmmModel model = load_model(opt.model_path);
  if (opt.json_output) {
    json j = {{"valid", true},
              {"num_states", model.num_states()},
              {"num_observations", model.num_observations()}};
    out << j.dump(2) << "\n";
  } else {
    out << "model OK: " << model.num_states() << " states, " << model.num_observations()
        << " observations\n";
  }
  return 0;
}

int cmd_decode(const Options& opt, std::ostream& out, std::ostream& err) {
  const HmmModel model = load_model(opt.model_path);
  const std::vector<AttackSignature> sigs =
      opt.signatures_path.empty() ? reference_signatures()
                                  : load_signatures(opt.signatures_path, model);

  ObservationSequence obs;
  std::optional<int> skipped;
  if (!opt.log_path.empty()) {
    const RuleSet rules = load_rules(opt.rules_path, model);
    for (const std::string& warning : rules.warnings) err << "warning: " << warning << "\n";
    const IngestResult ingested =
        parse_event_log(read_file(opt.log_path), rules, opt.log_path);
    obs = ingested.sequence;
    skipped = ingested.skipped_records;
  } else {
    obs = parse_obs_list(opt.obs_list, model);
  }

  const DecodeResult decoded = viterbi_decode(model, obs);
  const AttackMatch verdict = match_attack_type(decoded.path, sigs);
  const PredictionReport report = make_report(model, obs, decoded, verdict, skipped);
  if (opt.json_output)
    out << report_to_json(report);
  else
    render_report(out, report);
  return 0;
}

int cmd_evaluate(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.per_model_dir.empty()) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(opt.per_model_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw Error(ErrorCode::io_error, "no .json models in " + opt.per_model_dir);

    struct Ranked {
      std::string file;
      Likelihood likelihood;
    };
    std::vector<Ranked> ranking;
    for (const std::string& file : files) {
      try {
        const HmmModel model = load_model(file);
        const ObservationSequence obs = parse_obs_list(opt.obs_list, model);
        ranking.push_back({file, forward_likelihood(model, obs)});
      } catch (const Error& e) {
        err << "warning: skipping " << file << ": " << e.what() << "\n";
      }
    }
    if (ranking.empty())
      throw Error(ErrorCode::io_error, "no usable models in " + opt.per_model_dir);
    std::stable_sort(ranking.begin(), ranking.end(), [](const Ranked& a, const Ranked& b) {
      return a.likelihood.probability > b.likelihood.probability;
    });

    if (opt.json_output) {
      json j = json::array();
      for (const Ranked& r : ranking)
        j.push_back({{"model", r.file},
                     {"probability", r.likelihood.probability},
                     {"log_probability", r.likelihood.log_probability}});
      out << json{{"ranking", j}}.dump(2) << "\n";
    } else {
      out << "rank  probability       log probability   model\n";
      for (size_t i = 0; i < ranking.size(); ++i) {
        out << std::left << std::setw(6) << i + 1 << std::setw(18) << std::setprecision(9)
            << ranking[i].likelihood.probability << std::setw(18)
            << ranking[i].likelihood.log_probability << ranking[i].file << "\n";
      }
    }
    return 0;
  }

  const HmmModel model = load_model(opt.model_path);
  const ObservationSequence obs = parse_obs_list(opt.obs_list, model);
  const Likelihood likelihood = forward_likelihood(model, obs);
  if (opt.json_output) {
    json j = {{"probability", likelihood.probability},
              {"log_probability", likelihood.log_probability}};
    out << j.dump(2) << "\n";
  } else {
    out << std::setprecision(12) << "P(obs | model)     = " << likelihood.probability << "\n"
        << "log P(obs | model) = " << likelihood.log_probability << "\n";
  }
  return 0;
}

int cmd_reproduce(const Options& opt, std::ostream& out) {
  const HmmModel model = load_model(opt.model_path);
  const std::vector<AttackSignature> sigs =
      opt.signatures_path.empty() ? reference_signatures()
                                  : load_signatures(opt.signatures_path, model);

  const std::vector<ReproduceRow> rows = reproduce_signatures(model, sigs);
  const bool all_ok = std::ranges::all_of(rows, [](const ReproduceRow& r) { return r.ok(); });

  if (opt.json_output) {
    json j_rows = json::array();
    for (const ReproduceRow& row : rows) {
      j_rows.push_back({{"attack_type", row.attack_type},
                        {"observations", row.observations},
                        {"expected_path", row.expected_path},
                        {"decoded_path", row.decoded_path},
                        {"path_matches", row.path_matches},
                        {"exact_verdict", row.exact_verdict},
                        {"note", row.note}});
    }
    out << json{{"rows", j_rows}, {"all_passed", all_ok}}.dump(2) << "\n";
  } else {
    out << "result  attack type         observation sequence                 decoded path\n";
    for (const ReproduceRow& row : rows) {
      out << std::left << std::setw(8) << (row.ok() ? "PASS" : "FAIL") << std::setw(20)
          << row.attack_type << std::setw(37)
          << index_path_to_short(row.observations, model.observation_names());
      if (row.decoded_path.empty())
        out << "(" << row.note << ")";
      else
        out << index_path_to_short(row.decoded_path, model.state_names());
      out << "\n";
    }
    out << (all_ok ? "all attack paths reproduced\n" : "reproduction FAILED\n");
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hidden Markov Model attack-path decoder"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* validate = app.add_subcommand("validate", "check a model file");
  validate->add_option("--model", opt.model_path, "model JSON file")->required();
  validate->add_flag("--json", opt.json_output, "machine-readable output");

  CLI::App* decode = app.add_subcommand("decode", "decode an observation sequence");
  decode->add_option("--model", opt.model_path, "model JSON file")->required();
  CLI::Option* obs_opt =
      decode->add_option("--obs", opt.obs_list, "comma-separated observations (labels or indices)");
  CLI::Option* log_opt = decode->add_option("--log", opt.log_path, "CSV event log to ingest");
  CLI::Option* rules_opt = decode->add_option("--rules", opt.rules_path, "rules JSON file");
  decode->add_option("--signatures", opt.signatures_path,
                     "signature JSON file (default: built-in library)");
  decode->add_flag("--json", opt.json_output, "machine-readable output");
  obs_opt->excludes(log_opt);
  log_opt->needs(rules_opt);

  CLI::App* evaluate = app.add_subcommand("evaluate", "score observation likelihood");
  CLI::Option* model_opt = evaluate->add_option("--model", opt.model_path, "model JSON file");
  evaluate->add_option("--obs", opt.obs_list, "comma-separated observations")->required();
  CLI::Option* dir_opt =
      evaluate->add_option("--per-model", opt.per_model_dir, "rank all models in a directory");
  evaluate->add_flag("--json", opt.json_output, "machine-readable output");
  model_opt->excludes(dir_opt);

  CLI::App* reproduce = app.add_subcommand("reproduce", "replay the signature library");
  reproduce->add_option("--model", opt.model_path, "model JSON file")->required();
  reproduce->add_option("--signatures", opt.signatures_path,
                        "signature JSON file (default: built-in library)");
  reproduce->add_flag("--json", opt.json_output, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(opt, out);
    if (app.got_subcommand(decode)) {
      if (opt.obs_list.empty() && opt.log_path.empty())
        throw Error(ErrorCode::parse_error, "decode needs --obs or --log");
      return cmd_decode(opt, out, err);
    }
    if (app.got_subcommand(evaluate)) {
      if (opt.model_path.empty() && opt.per_model_dir.empty())
        throw Error(ErrorCode::parse_error, "evaluate needs --model or --per-model");
      return cmd_evaluate(opt, out, err);
    }
    if (app.got_subcommand(reproduce)) return cmd_reproduce(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("hmmpath");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hmmpath::cli
