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

#include "ionbench/circuit/circuit.h"

#include <stdexcept>
#include <string>

namespace ionbench {

Circuit &Circuit::append(const Gate &gate) {
    for (size_t k = 0; k < gate.arity(); k++) {
        if (gate.qubits[k] >= width_) {
            throw std::invalid_argument("gate '" + std::string(gate_name(gate.kind)) + "' on qubit " +
                                        std::to_string(gate.qubits[k]) + " outside circuit width " +
                                        std::to_string(width_));
        }
    }
    elements_.emplace_back(gate);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.width_ > width_) {
        throw std::invalid_argument("appended circuit is wider than target");
    }
    for (const auto &e : other.elements_) {
        if (const auto *g = std::get_if<Gate>(&e)) {
            append(*g);
        } else {
            barrier();
        }
    }
    return *this;
}

Circuit &Circuit::barrier() {
    elements_.emplace_back(Barrier{});
    return *this;
}

std::vector<Gate> Circuit::gates() const {
    std::vector<Gate> out;
    out.reserve(elements_.size());
    for (const auto &e : elements_) {
        if (const auto *g = std::get_if<Gate>(&e)) {
            out.push_back(*g);
        }
    }
    return out;
}

size_t Circuit::gate_count() const {
    size_t n = 0;
    for (const auto &e : elements_) {
        n += std::holds_alternative<Gate>(e);
    }
    return n;
}

size_t two_qubit_gate_count(const Circuit &circuit) {
    size_t n = 0;
    for (const auto &e : circuit.elements()) {
        if (const auto *g = std::get_if<Gate>(&e)) {
            n += g->arity() == 2;
        }
    }
    return n;
}

bool is_native(const Circuit &circuit) {
    for (const auto &e : circuit.elements()) {
        if (const auto *g = std::get_if<Gate>(&e); g != nullptr && !g->is_native()) {
            return false;
        }
    }
    return true;
}

Circuit remap_qubits(const Circuit &circuit, const std::vector<uint32_t> &qubit_map, size_t new_width) {
    if (qubit_map.size() != circuit.width()) {
        throw std::invalid_argument("qubit map size " + std::to_string(qubit_map.size()) +
                                    " does not match circuit width " + std::to_string(circuit.width()));
    }
    std::vector<bool> used(new_width, false);
    for (uint32_t p : qubit_map) {
        if (p >= new_width || used[p]) {
            throw std::invalid_argument("qubit map is not injective into " + std::to_string(new_width) + " qubits");
        }
        used[p] = true;
    }
    Circuit out(new_width);
    for (const auto &e : circuit.elements()) {
        if (const auto *g = std::get_if<Gate>(&e)) {
            Gate mapped = *g;
            for (size_t k = 0; k < g->arity(); k++) {
                mapped.qubits[k] = qubit_map[g->qubits[k]];
            }
            out.append(mapped);
        } else {
            out.barrier();
        }
    }
    return out;
}

}  // namespace ionbench
