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

#ifndef IONBENCH_COMPILER_VARIANTS_H
#define IONBENCH_COMPILER_VARIANTS_H

#include <cstdint>
#include <string>
#include <vector>

#include "ionbench/circuit/circuit.h"

namespace ionbench {

constexpr size_t DEFAULT_NUM_VARIANTS = 25;

/// One physical execution of a logical circuit. `circuit` acts on physical
/// qubits; logical qubit q runs on physical qubit `qubit_map[q]`.
struct Variant {
    Circuit circuit;
    std::vector<uint32_t> qubit_map;

    bool operator==(const Variant &) const = default;
};

struct VariantSet {
    Circuit reference;
    std::vector<Variant> variants;
    uint64_t seed = 0;

    bool operator==(const VariantSet &) const = default;
};

/// Compiles `circuit` to native gates `n_variants` times. Each variant draws an
/// independent injective logical->physical map and a random Z-type Pauli frame
/// (II, ZI, IZ or ZZ, as virtual RZ(pi) pairs) around every ZZ, which leaves the
/// unitary unchanged. Variant v uses the random stream (seed, "variant", v).
/// Throws std::invalid_argument if n_variants < 1 or physical_width < width.
VariantSet generate_variants(const Circuit &circuit, size_t n_variants, size_t physical_width, uint64_t seed);

/// Variant circuit relabelled back onto logical qubits 0..width-1.
Circuit to_logical(const Variant &variant);

struct ReferenceDims {
    size_t width;
    size_t two_qubit_gates;

    bool operator==(const ReferenceDims &) const = default;
};

/// (w_c, d_c) of a pre-compilation reference circuit.
ReferenceDims reference_dims(const Circuit &reference);

std::string variant_set_to_json(const VariantSet &set);
VariantSet variant_set_from_json(const std::string &text);

}  // namespace ionbench

#endif
