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

#include "ionbench/circuit/gate.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ionbench {

namespace {

struct KindInfo {
    std::string_view name;
    size_t arity;
    bool has_angle;
    bool native;
};

constexpr std::array<KindInfo, NUM_GATE_KINDS> KIND_INFO{{
    {"x90", 1, false, true},
    {"y90", 1, false, true},
    {"rz", 1, true, true},
    {"xx", 2, true, true},
    {"zz", 2, true, true},
    {"h", 1, false, false},
    {"cnot", 2, false, false},
    {"cz", 2, false, false},
    {"cphase", 2, true, false},
    {"swap", 2, false, false},
}};

const KindInfo &info(GateKind kind) {
    return KIND_INFO[static_cast<size_t>(kind)];
}

constexpr double ANGLE_GRID = 0x1.0p-40;

}  // namespace

std::string_view gate_name(GateKind kind) {
    return info(kind).name;
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (size_t k = 0; k < NUM_GATE_KINDS; k++) {
        if (KIND_INFO[k].name == name) {
            return static_cast<GateKind>(k);
        }
    }
    return std::nullopt;
}

size_t gate_arity(GateKind kind) {
    return info(kind).arity;
}

bool gate_has_angle(GateKind kind) {
    return info(kind).has_angle;
}

bool gate_is_native(GateKind kind) {
    return info(kind).native;
}

double canonicalize_angle(double angle) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::remainder(angle, two_pi);
    // No grid point lies on pi; the band around +-pi maps to pi itself.
    if (std::abs(r) >= std::numbers::pi - ANGLE_GRID / 2) {
        return std::numbers::pi;
    }
    r = std::round(r / ANGLE_GRID) * ANGLE_GRID;
    if (r == 0) {
        r = 0;  // drop negative zero
    }
    return r;
}

Gate Gate::make(GateKind kind, std::initializer_list<uint32_t> qubits, double angle) {
    Gate g{kind, {}, 0};
    if (qubits.size() != gate_arity(kind)) {
        throw std::invalid_argument(
            "gate '" + std::string(gate_name(kind)) + "' takes " + std::to_string(gate_arity(kind)) + " qubit(s), got " +
            std::to_string(qubits.size()));
    }
    size_t k = 0;
    for (uint32_t q : qubits) {
        g.qubits[k++] = q;
    }
    if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument("two-qubit gate '" + std::string(gate_name(kind)) + "' on repeated qubit " +
                                    std::to_string(g.qubits[0]));
    }
    if (gate_has_angle(kind)) {
        g.angle = canonicalize_angle(angle);
    } else if (angle != 0) {
        throw std::invalid_argument("gate '" + std::string(gate_name(kind)) + "' takes no angle");
    }
    return g;
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || angle != other.angle) {
        return false;
    }
    for (size_t k = 0; k < arity(); k++) {
        if (qubits[k] != other.qubits[k]) {
            return false;
        }
    }
    return true;
}

Mat2 gate_matrix_1q(const Gate &gate) {
    const double s = std::numbers::sqrt2 / 2;
    const Complex i(0, 1);
    switch (gate.kind) {
        case GateKind::X90:
            return {s, -i * s, -i * s, s};
        case GateKind::Y90:
            return {s, -s, s, s};
        case GateKind::RZ:
            return {std::exp(-i * (gate.angle / 2)), 0, 0, std::exp(i * (gate.angle / 2))};
        case GateKind::H:
            return {s, s, s, -s};
        default:
            throw std::invalid_argument("gate_matrix_1q: '" + std::string(gate_name(gate.kind)) + "' is not 1-qubit");
    }
}

Mat4 gate_matrix_2q(const Gate &gate) {
    const Complex i(0, 1);
    Mat4 m{};
    auto diag = [&](Complex a, Complex b, Complex c, Complex d) {
        m[0] = a;
        m[5] = b;
        m[10] = c;
        m[15] = d;
    };
    switch (gate.kind) {
        case GateKind::XX: {
            Complex c = std::cos(gate.angle);
            Complex s = -i * std::sin(gate.angle);
            diag(c, c, c, c);
            m[3] = m[6] = m[9] = m[12] = s;
            return m;
        }
        case GateKind::ZZ: {
            Complex even = std::exp(-i * gate.angle);
            Complex odd = std::exp(i * gate.angle);
            diag(even, odd, odd, even);
            return m;
        }
        case GateKind::CNOT:
            m[0] = m[5] = m[11] = m[14] = 1;
            return m;
        case GateKind::CZ:
            diag(1, 1, 1, -1);
            return m;
        case GateKind::CPHASE:
            diag(1, 1, 1, std::exp(i * gate.angle));
            return m;
        case GateKind::SWAP:
            m[0] = m[6] = m[9] = m[15] = 1;
            return m;
        default:
            throw std::invalid_argument("gate_matrix_2q: '" + std::string(gate_name(gate.kind)) + "' is not 2-qubit");
    }
}

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

Mat4 mat4_mul(const Mat4 &a, const Mat4 &b) {
    Mat4 out{};
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            Complex acc = 0;
            for (size_t k = 0; k < 4; k++) {
                acc += a[r * 4 + k] * b[k * 4 + c];
            }
            out[r * 4 + c] = acc;
        }
    }
    return out;
}

}  // namespace ionbench
