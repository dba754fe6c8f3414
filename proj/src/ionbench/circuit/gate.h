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

#ifndef IONBENCH_CIRCUIT_GATE_H
#define IONBENCH_CIRCUIT_GATE_H

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ionbench {

using Complex = std::complex<double>;
/// Row-major 2x2 matrix.
using Mat2 = std::array<Complex, 4>;
/// Row-major 4x4 matrix. Local basis index is 2*bit(qubits[0]) + bit(qubits[1]).
using Mat4 = std::array<Complex, 16>;

/// Gate kinds of the circuit IR.
///
/// Conventions (all unitaries exact, no hidden global phase):
///   X90 = exp(-i pi/4 X)      Y90 = exp(-i pi/4 Y)      RZ(t) = exp(-i t/2 Z)
///   XX(c) = exp(-i c X(x)X)   ZZ(c) = exp(-i c Z(x)Z)
///   H, CNOT (control = qubits[0]), CZ, SWAP as textbook matrices
///   CPHASE(t) = diag(1, 1, 1, e^{i t})
enum class GateKind : uint8_t { X90, Y90, RZ, XX, ZZ, H, CNOT, CZ, CPHASE, SWAP };

constexpr size_t NUM_GATE_KINDS = 10;

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
size_t gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);
/// Native set of the trapped-ion target: X90, Y90, RZ, XX, ZZ.
bool gate_is_native(GateKind kind);

/// Maps an angle into (-pi, pi] and snaps it onto a 2^-40 rad grid, so that
/// t and t + 2*pi canonicalize to bit-identical values.
double canonicalize_angle(double angle);

struct Gate {
    GateKind kind;
    std::array<uint32_t, 2> qubits{};
    double angle = 0;

    /// Validates arity / distinct qubits and canonicalizes the angle.
    /// Throws std::invalid_argument on bad input.
    static Gate make(GateKind kind, std::initializer_list<uint32_t> qubits, double angle = 0);

    static Gate x90(uint32_t q) { return make(GateKind::X90, {q}); }
    static Gate y90(uint32_t q) { return make(GateKind::Y90, {q}); }
    static Gate rz(uint32_t q, double t) { return make(GateKind::RZ, {q}, t); }
    static Gate h(uint32_t q) { return make(GateKind::H, {q}); }
    static Gate xx(uint32_t a, uint32_t b, double c) { return make(GateKind::XX, {a, b}, c); }
    static Gate zz(uint32_t a, uint32_t b, double c) { return make(GateKind::ZZ, {a, b}, c); }
    static Gate cnot(uint32_t c, uint32_t t) { return make(GateKind::CNOT, {c, t}); }
    static Gate cz(uint32_t a, uint32_t b) { return make(GateKind::CZ, {a, b}); }
    static Gate cphase(uint32_t a, uint32_t b, double t) { return make(GateKind::CPHASE, {a, b}, t); }
    static Gate swap(uint32_t a, uint32_t b) { return make(GateKind::SWAP, {a, b}); }

    size_t arity() const { return gate_arity(kind); }
    bool is_native() const { return gate_is_native(kind); }
    bool operator==(const Gate &other) const;
};

/// Unitary of a one-qubit gate. Throws std::invalid_argument for 2Q kinds.
Mat2 gate_matrix_1q(const Gate &gate);
/// Unitary of a two-qubit gate. Throws std::invalid_argument for 1Q kinds.
Mat4 gate_matrix_2q(const Gate &gate);

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b);
Mat4 mat4_mul(const Mat4 &a, const Mat4 &b);

namespace pauli_mats {
inline const Mat2 I{1, 0, 0, 1};
inline const Mat2 X{0, 1, 1, 0};
inline const Mat2 Y{0, Complex(0, -1), Complex(0, 1), 0};
inline const Mat2 Z{1, 0, 0, -1};
/// Indexed I, X, Y, Z.
inline const std::array<Mat2, 4> ALL{I, X, Y, Z};
}  // namespace pauli_mats

}  // namespace ionbench

#endif
