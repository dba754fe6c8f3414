// Copyright 2026 The ionbench Authors
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

#ifndef IONBENCH_CLI_COMMANDS_H
#define IONBENCH_CLI_COMMANDS_H

#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ionbench/appsuite/appsuite.h"
#include "json.hpp"

namespace ionbench::cli {

/// Bad command-line or config input. Exit status 2.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

using Params = nlohmann::json;

/// Prefix of environment overrides, e.g. IONBENCH_SEED.
constexpr const char *ENV_PREFIX = "IONBENCH_";

extern const std::vector<std::string> COMMANDS;

/// Defaults of `command` (one of drb, bench, score, vote, timing).
Params default_params(const std::string &command);

/// Layers parameters: defaults < config document < environment < flags.
/// The config is either a flat object or a manifest {"command", "params"}.
/// Environment variables IONBENCH_<KEY> (upper case) override keys that
/// already exist in the defaults; values parse as JSON, falling back to strings.
/// Throws UsageError on unknown keys or a manifest for another command.
Params resolve_params(const std::string &command, const std::optional<std::string> &config_text,
                      const std::function<std::optional<std::string>(const std::string &)> &env, const Params &flags);

/// Runs `command` with resolved parameters; writes outputs and manifest.json
/// under params["out"] and a summary to `out`. Throws on error.
void run_command(const std::string &command, const Params &params, std::ostream &out, std::ostream &err);

/// Maps exceptions to exit codes: 0 ok, 1 runtime failure, 2 usage, 3 parse.
int run_command_safely(const std::string &command, const Params &params, std::ostream &out, std::ostream &err);

/// One benchmark instance from its JSON description, e.g.
/// {"family": "qft", "width": 5, "input": 3}, {"family": "qpe", "width": 5, "phase": 0.25},
/// {"family": "hamsim", "width": 4, "steps": 3, "coupling": 1, "field": 1, "dt": 0.2},
/// {"family": "ingested", "name": "ae-7", "circuit": "c.json", "distribution": "d.json"}.
ApplicationInstance make_instance(const Params &spec);

/// Built-in suite: for every family and width, one instance whose parameters
/// are drawn from (seed, "suite-<family>", width). QFT uses the round-trip
/// form, QPE an exact (width-1)-bit phase, HamSim `width` Trotter steps with
/// coupling 1, field 0.1 and dt 0.2.
std::vector<Params> default_suite(const std::vector<std::string> &families, size_t min_width, size_t max_width,
                                  uint64_t seed);

}  // namespace ionbench::cli

#endif
