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

#include "ionbench/circuit/circuit_json.h"

#include <cstdio>
#include <optional>

#include "ionbench/util/errors.h"

namespace ionbench {

namespace {

/// Byte offset of element `index` of the array stored under the first "ops"
/// key in `text`, if it can be found by a plain lexical scan.
std::optional<size_t> locate_op(const std::string &text, size_t index) {
    size_t key = std::string::npos;
    bool in_string = false;
    for (size_t k = 0; k < text.size(); k++) {
        char c = text[k];
        if (in_string) {
            if (c == '\\') {
                k++;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            if (text.compare(k, 5, "\"ops\"") == 0) {
                key = k + 5;
                break;
            }
            in_string = true;
        }
    }
    if (key == std::string::npos) {
        return std::nullopt;
    }
    size_t open = text.find('[', key);
    if (open == std::string::npos) {
        return std::nullopt;
    }
    int depth = 0;
    size_t element = 0;
    bool expecting_start = true;
    in_string = false;
    for (size_t k = open + 1; k < text.size(); k++) {
        char c = text[k];
        if (in_string) {
            if (c == '\\') {
                k++;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
            continue;
        }
        if (depth == 0 && expecting_start) {
            if (c == ']') {
                return std::nullopt;
            }
            if (element == index) {
                return k;
            }
            expecting_start = false;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '[' || c == '{') {
            depth++;
        } else if (c == ']' || c == '}') {
            if (depth == 0) {
                return std::nullopt;
            }
            depth--;
        } else if (c == ',' && depth == 0) {
            element++;
            expecting_start = true;
        }
    }
    return std::nullopt;
}

struct OpError {
    size_t index;
    std::string message;
};

Circuit build_circuit(const nlohmann::json &value, std::optional<OpError> &error) {
    if (!value.is_object()) {
        throw ParseError("circuit must be a JSON object");
    }
    if (!value.contains("width") || !value["width"].is_number_unsigned()) {
        throw ParseError("circuit field 'width' must be a non-negative integer");
    }
    if (!value.contains("ops") || !value["ops"].is_array()) {
        throw ParseError("circuit field 'ops' must be an array");
    }
    Circuit circuit(value["width"].get<size_t>());
    const auto &ops = value["ops"];
    for (size_t k = 0; k < ops.size(); k++) {
        const auto &op = ops[k];
        auto fail = [&](const std::string &message) {
            error = OpError{k, message};
            return circuit;
        };
        if (!op.is_array() || op.empty() || !op[0].is_string()) {
            return fail("op must be an array starting with a gate name");
        }
        auto name = op[0].get<std::string>();
        if (name == "barrier") {
            if (op.size() != 1) {
                return fail("barrier takes no arguments");
            }
            circuit.barrier();
            continue;
        }
        auto kind = gate_kind_from_name(name);
        if (!kind) {
            return fail("unknown gate '" + name + "'");
        }
        size_t expected = gate_has_angle(*kind) ? 3 : 2;
        if (op.size() != expected) {
            return fail("gate '" + name + "' expects " + std::to_string(expected) + " fields");
        }
        if (!op[1].is_array() || op[1].size() != gate_arity(*kind)) {
            return fail("gate '" + name + "' expects " + std::to_string(gate_arity(*kind)) + " qubit(s)");
        }
        std::array<uint32_t, 2> qs{};
        for (size_t j = 0; j < op[1].size(); j++) {
            if (!op[1][j].is_number_unsigned() || op[1][j].get<uint64_t>() > UINT32_MAX) {
                return fail("qubit index must be a non-negative integer");
            }
            qs[j] = op[1][j].get<uint32_t>();
        }
        double angle = 0;
        if (expected == 3) {
            if (!op[2].is_number()) {
                return fail("angle must be a number");
            }
            angle = op[2].get<double>();
        }
        try {
            Gate g = gate_arity(*kind) == 1 ? Gate::make(*kind, {qs[0]}, angle) : Gate::make(*kind, {qs[0], qs[1]}, angle);
            circuit.append(g);
        } catch (const std::invalid_argument &ex) {
            return fail(ex.what());
        }
    }
    return circuit;
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    std::string out(buf);
    // Keep it a JSON number that reads back as floating point.
    if (out.find_first_of(".eEn") == std::string::npos) {
        out += ".0";
    }
    return out;
}

std::string circuit_to_json(const Circuit &circuit) {
    std::string out = "{\"width\": " + std::to_string(circuit.width()) + ", \"ops\": [";
    bool first = true;
    for (const auto &e : circuit.elements()) {
        out += first ? "\n  " : ",\n  ";
        first = false;
        if (const auto *g = std::get_if<Gate>(&e)) {
            out += "[\"";
            out += gate_name(g->kind);
            out += "\", [" + std::to_string(g->qubits[0]);
            if (g->arity() == 2) {
                out += ", " + std::to_string(g->qubits[1]);
            }
            out += "]";
            if (gate_has_angle(g->kind)) {
                out += ", " + format_double(g->angle);
            }
            out += "]";
        } else {
            out += "[\"barrier\"]";
        }
    }
    out += first ? "]}\n" : "\n]}\n";
    return out;
}

Circuit circuit_from_json(const std::string &text) {
    nlohmann::json value;
    try {
        value = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &ex) {
        auto [line, column] = line_column_at(text, ex.byte > 0 ? ex.byte - 1 : 0);
        throw ParseError(std::string("malformed JSON: ") + ex.what(), line, column);
    }
    std::optional<OpError> error;
    Circuit circuit = build_circuit(value, error);
    if (error) {
        std::string message = "ops[" + std::to_string(error->index) + "]: " + error->message;
        if (auto offset = locate_op(text, error->index)) {
            auto [line, column] = line_column_at(text, *offset);
            throw ParseError(message, line, column);
        }
        throw ParseError(message);
    }
    return circuit;
}

Circuit circuit_from_json_value(const nlohmann::json &value) {
    std::optional<OpError> error;
    Circuit circuit = build_circuit(value, error);
    if (error) {
        throw ParseError("ops[" + std::to_string(error->index) + "]: " + error->message);
    }
    return circuit;
}

}  // namespace ionbench
