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

#ifndef IONBENCH_CIRCUIT_CIRCUIT_H
#define IONBENCH_CIRCUIT_CIRCUIT_H

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ionbench/circuit/gate.h"

namespace ionbench {

/// Compilation fence across all qubits. Has no effect on noiseless semantics.
struct Barrier {
    bool operator==(const Barrier &) const = default;
};

using Element = std::variant<Gate, Barrier>;

/// Ordered gate sequence over `width` indexed qubits.
///
/// Built by appending, then treated as an immutable value; copies are cheap
/// enough for the sizes used here and sharing const references across worker
/// threads is safe.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(size_t width) : width_(width) {}

    size_t width() const { return width_; }
    const std::vector<Element> &elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }

    /// Appends a gate. Throws std::invalid_argument if a qubit index is >= width.
    Circuit &append(const Gate &gate);
    Circuit &append(const Circuit &other);
    Circuit &barrier();

    /// Gates in order, barriers dropped.
    std::vector<Gate> gates() const;
    size_t gate_count() const;

    bool operator==(const Circuit &other) const = default;

   private:
    size_t width_ = 0;
    std::vector<Element> elements_;
};

/// Number of gates acting on two qubits.
size_t two_qubit_gate_count(const Circuit &circuit);

/// Whether every gate is in the native set.
bool is_native(const Circuit &circuit);

/// Copy of `circuit` on `new_width` qubits with logical qubit q moved to
/// `qubit_map[q]`. Throws std::invalid_argument if the map is not injective
/// into [0, new_width).
Circuit remap_qubits(const Circuit &circuit, const std::vector<uint32_t> &qubit_map, size_t new_width);

}  // namespace ionbench

#endif
