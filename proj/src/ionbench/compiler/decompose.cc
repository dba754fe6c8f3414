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

#include "ionbench/compiler/decompose.h"

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace ionbench {

namespace {

constexpr double PI = std::numbers::pi;

void append_ry_minus_90(std::vector<Gate> &out, uint32_t q) {
    out.push_back(Gate::rz(q, PI));
    out.push_back(Gate::y90(q));
    out.push_back(Gate::rz(q, PI));
}

void append_h(std::vector<Gate> &out, uint32_t q) {
    out.push_back(Gate::rz(q, PI));
    out.push_back(Gate::y90(q));
}

void append_cphase(std::vector<Gate> &out, uint32_t a, uint32_t b, double theta) {
    // diag(1,1,1,e^{it}) = e^{it/4} RZ_a(t/2) RZ_b(t/2) ZZ(-t/4)
    out.push_back(Gate::rz(a, theta / 2));
    out.push_back(Gate::rz(b, theta / 2));
    out.push_back(Gate::zz(a, b, -theta / 4));
}

void append_cnot(std::vector<Gate> &out, uint32_t c, uint32_t t) {
    append_h(out, t);
    append_cphase(out, c, t, PI);
    append_h(out, t);
}

void expand(const Gate &g, std::vector<Gate> &out) {
    const uint32_t a = g.qubits[0];
    const uint32_t b = g.qubits[1];
    switch (g.kind) {
        case GateKind::X90:
        case GateKind::Y90:
        case GateKind::RZ:
        case GateKind::ZZ:
            out.push_back(g);
            return;
        case GateKind::XX: {
            auto seq = wrap_xx_as_zz(g);
            out.insert(out.end(), seq.begin(), seq.end());
            return;
        }
        case GateKind::H:
            append_h(out, a);
            return;
        case GateKind::CZ:
            append_cphase(out, a, b, PI);
            return;
        case GateKind::CPHASE:
            if (g.angle != 0) {
                append_cphase(out, a, b, g.angle);
            }
            return;
        case GateKind::CNOT:
            append_cnot(out, a, b);
            return;
        case GateKind::SWAP:
            append_cnot(out, a, b);
            append_cnot(out, b, a);
            append_cnot(out, a, b);
            return;
    }
    throw std::invalid_argument("decompose_to_native: unsupported gate kind");
}

}  // namespace

std::vector<Gate> wrap_xx_as_zz(const Gate &xx) {
    if (xx.kind != GateKind::XX) {
        throw std::invalid_argument("wrap_xx_as_zz expects an XX gate, got '" + std::string(gate_name(xx.kind)) + "'");
    }
    std::vector<Gate> out;
    append_ry_minus_90(out, xx.qubits[0]);
    append_ry_minus_90(out, xx.qubits[1]);
    out.push_back(Gate::zz(xx.qubits[0], xx.qubits[1], xx.angle));
    out.push_back(Gate::y90(xx.qubits[0]));
    out.push_back(Gate::y90(xx.qubits[1]));
    return out;
}

std::vector<Gate> wrap_zz_as_xx(const Gate &zz) {
    if (zz.kind != GateKind::ZZ) {
        throw std::invalid_argument("wrap_zz_as_xx expects a ZZ gate, got '" + std::string(gate_name(zz.kind)) + "'");
    }
    std::vector<Gate> out;
    out.push_back(Gate::y90(zz.qubits[0]));
    out.push_back(Gate::y90(zz.qubits[1]));
    out.push_back(Gate::xx(zz.qubits[0], zz.qubits[1], zz.angle));
    append_ry_minus_90(out, zz.qubits[0]);
    append_ry_minus_90(out, zz.qubits[1]);
    return out;
}

Circuit merge_rotations(const Circuit &circuit, bool keep_barriers) {
    Circuit out(circuit.width());
    std::vector<std::optional<double>> pending(circuit.width());
    auto flush = [&](uint32_t q) {
        if (pending[q]) {
            double angle = canonicalize_angle(*pending[q]);
            if (angle != 0) {
                out.append(Gate::rz(q, angle));
            }
            pending[q].reset();
        }
    };
    auto flush_all = [&]() {
        for (uint32_t q = 0; q < circuit.width(); q++) {
            flush(q);
        }
    };
    for (const auto &e : circuit.elements()) {
        const auto *g = std::get_if<Gate>(&e);
        if (g == nullptr) {
            flush_all();
            if (keep_barriers) {
                out.barrier();
            }
            continue;
        }
        if (g->kind == GateKind::RZ) {
            pending[g->qubits[0]] = pending[g->qubits[0]].value_or(0) + g->angle;
            continue;
        }
        if (gate_has_angle(g->kind) && g->angle == 0) {
            continue;
        }
        for (size_t k = 0; k < g->arity(); k++) {
            flush(g->qubits[k]);
        }
        out.append(*g);
    }
    flush_all();
    return out;
}

Circuit decompose_to_native(const Circuit &circuit) {
    Circuit expanded(circuit.width());
    std::vector<Gate> seq;
    for (const auto &e : circuit.elements()) {
        if (const auto *g = std::get_if<Gate>(&e)) {
            seq.clear();
            expand(*g, seq);
            for (const auto &s : seq) {
                expanded.append(s);
            }
        } else {
            expanded.barrier();
        }
    }
    return merge_rotations(expanded, false);
}

}  // namespace ionbench
