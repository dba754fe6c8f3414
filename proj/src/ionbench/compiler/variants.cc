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

#include "ionbench/compiler/variants.h"

#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ionbench/circuit/circuit_json.h"
#include "ionbench/compiler/decompose.h"
#include "ionbench/util/errors.h"
#include "ionbench/util/rng.h"

namespace ionbench {

namespace {

std::vector<uint32_t> sample_injection(Rng &rng, size_t width, size_t physical_width) {
    std::vector<uint32_t> pool(physical_width);
    std::iota(pool.begin(), pool.end(), 0);
    for (size_t k = 0; k < width; k++) {
        size_t j = k + uniform_index(rng, physical_width - k);
        std::swap(pool[k], pool[j]);
    }
    pool.resize(width);
    return pool;
}

Circuit randomize_frames(const Circuit &native, Rng &rng) {
    Circuit framed(native.width());
    for (const auto &e : native.elements()) {
        const auto *g = std::get_if<Gate>(&e);
        if (g == nullptr || g->kind != GateKind::ZZ) {
            if (g != nullptr) {
                framed.append(*g);
            } else {
                framed.barrier();
            }
            continue;
        }
        // Z_a, Z_b and Z_aZ_b all commute with ZZ, so P ZZ P = ZZ.
        uint64_t frame = uniform_index(rng, 4);
        auto conjugate = [&]() {
            for (size_t k = 0; k < 2; k++) {
                if ((frame >> k) & 1) {
                    framed.append(Gate::rz(g->qubits[k], std::numbers::pi));
                }
            }
        };
        conjugate();
        framed.append(*g);
        conjugate();
    }
    return merge_rotations(framed, false);
}

}  // namespace

VariantSet generate_variants(const Circuit &circuit, size_t n_variants, size_t physical_width, uint64_t seed) {
    if (n_variants < 1) {
        throw std::invalid_argument("generate_variants: n_variants must be at least 1");
    }
    if (physical_width < circuit.width()) {
        throw std::invalid_argument("generate_variants: physical width " + std::to_string(physical_width) +
                                    " is smaller than circuit width " + std::to_string(circuit.width()));
    }
    Circuit native = decompose_to_native(circuit);
    VariantSet set{circuit, std::vector<Variant>(n_variants), seed};
#pragma omp parallel for schedule(static)
    for (size_t v = 0; v < n_variants; v++) {
        Rng rng = make_rng(seed, "variant", v);
        auto map = sample_injection(rng, circuit.width(), physical_width);
        Circuit framed = randomize_frames(native, rng);
        set.variants[v] = Variant{remap_qubits(framed, map, physical_width), std::move(map)};
    }
    return set;
}

Circuit to_logical(const Variant &variant) {
    std::vector<int64_t> inverse(variant.circuit.width(), -1);
    for (size_t q = 0; q < variant.qubit_map.size(); q++) {
        inverse[variant.qubit_map[q]] = static_cast<int64_t>(q);
    }
    Circuit out(variant.qubit_map.size());
    for (const auto &e : variant.circuit.elements()) {
        if (const auto *g = std::get_if<Gate>(&e)) {
            Gate mapped = *g;
            for (size_t k = 0; k < g->arity(); k++) {
                int64_t q = inverse[g->qubits[k]];
                if (q < 0) {
                    throw std::invalid_argument("variant touches physical qubit outside its map");
                }
                mapped.qubits[k] = static_cast<uint32_t>(q);
            }
            out.append(mapped);
        } else {
            out.barrier();
        }
    }
    return out;
}

ReferenceDims reference_dims(const Circuit &reference) {
    return {reference.width(), two_qubit_gate_count(reference)};
}

std::string variant_set_to_json(const VariantSet &set) {
    std::string out = "{\"seed\": " + std::to_string(set.seed) + ",\n\"reference\": " + circuit_to_json(set.reference);
    out += ",\n\"variants\": [";
    for (size_t v = 0; v < set.variants.size(); v++) {
        const auto &variant = set.variants[v];
        out += v == 0 ? "\n" : ",\n";
        out += "{\"map\": [";
        for (size_t q = 0; q < variant.qubit_map.size(); q++) {
            out += (q ? ", " : "") + std::to_string(variant.qubit_map[q]);
        }
        out += "],\n\"circuit\": " + circuit_to_json(variant.circuit) + "}";
    }
    out += "]}\n";
    return out;
}

VariantSet variant_set_from_json(const std::string &text) {
    nlohmann::json value;
    try {
        value = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &ex) {
        auto [line, column] = line_column_at(text, ex.byte > 0 ? ex.byte - 1 : 0);
        throw ParseError(std::string("malformed JSON: ") + ex.what(), line, column);
    }
    try {
        VariantSet set;
        set.seed = value.at("seed").get<uint64_t>();
        set.reference = circuit_from_json_value(value.at("reference"));
        for (const auto &v : value.at("variants")) {
            Variant variant{circuit_from_json_value(v.at("circuit")), v.at("map").get<std::vector<uint32_t>>()};
            set.variants.push_back(std::move(variant));
        }
        return set;
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("bad variant set: ") + ex.what());
    }
}

}  // namespace ionbench
