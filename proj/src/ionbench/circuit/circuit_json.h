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

#ifndef IONBENCH_CIRCUIT_CIRCUIT_JSON_H
#define IONBENCH_CIRCUIT_CIRCUIT_JSON_H

#include <string>

#include "ionbench/circuit/circuit.h"
#include "json.hpp"

namespace ionbench {

/// Canonical circuit text:
///   {"width": 3, "ops": [
///     ["x90", [0]],
///     ["zz", [0, 1], 0.78539816339744828],
///     ["barrier"]
///   ]}
/// One op per line, angles with 17 significant digits. Byte-stable for equal circuits.
std::string circuit_to_json(const Circuit &circuit);

/// Parses circuit text. Throws ParseError carrying line/column on malformed
/// JSON, unknown gate tokens, bad qubit lists or out-of-range indices.
Circuit circuit_from_json(const std::string &text);

/// Builds a circuit from an already-parsed JSON value (used for circuits
/// embedded in other documents). Throws ParseError without location.
Circuit circuit_from_json_value(const nlohmann::json &value);

/// %.17g rendering used by every text writer in the project.
std::string format_double(double value);

}  // namespace ionbench

#endif
