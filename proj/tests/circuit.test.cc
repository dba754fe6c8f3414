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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "ionbench/circuit/circuit.h"
#include "ionbench/circuit/circuit_json.h"
#include "ionbench/circuit/unitary.h"
#include "ionbench/util/bits.h"
#include "ionbench/util/errors.h"

using namespace ionbench;
using std::numbers::pi;

TEST(bits, bitstring_round_trip) {
    EXPECT_EQ(to_bitstring(0b101, 3), "101");
    EXPECT_EQ(to_bitstring(0b001, 3), "100");
    EXPECT_EQ(parse_bitstring("100"), 1u);
    EXPECT_EQ(parse_bitstring(to_bitstring(0xdeadbeef, 40)), 0xdeadbeefu);
    EXPECT_THROW(parse_bitstring("10x"), std::invalid_argument);
    EXPECT_THROW(parse_bitstring(std::string(65, '0')), std::invalid_argument);
}

TEST(gate, make_validates_arity) {
    EXPECT_THROW(Gate::make(GateKind::ZZ, {0}), std::invalid_argument);
    EXPECT_THROW(Gate::make(GateKind::X90, {0, 1}), std::invalid_argument);
    EXPECT_THROW(Gate::zz(1, 1, 0.1), std::invalid_argument);
    EXPECT_TRUE(Gate::zz(0, 1, 0.1).is_native());
    EXPECT_FALSE(Gate::cnot(0, 1).is_native());
    for (size_t k = 0; k < NUM_GATE_KINDS; k++) {
        auto kind = static_cast<GateKind>(k);
        EXPECT_EQ(gate_kind_from_name(gate_name(kind)), kind);
    }
    EXPECT_FALSE(gate_kind_from_name("toffoli").has_value());
}

TEST(gate, canonical_angles) {
    for (double t : {0.3, -2.9, pi, 1e-7, 3.0}) {
        Gate a = Gate::rz(0, t);
        Gate b = Gate::rz(0, t + 2 * pi);
        Gate c = Gate::rz(0, t - 4 * pi);
        EXPECT_EQ(a.angle, b.angle);
        EXPECT_EQ(a.angle, c.angle);
        EXPECT_GT(a.angle, -pi);
        EXPECT_LE(a.angle, pi);
    }
    EXPECT_EQ(Gate::rz(0, -pi).angle, Gate::rz(0, pi).angle);
}

TEST(circuit, two_qubit_count) {
    Circuit empty(3);
    EXPECT_EQ(two_qubit_gate_count(empty), 0u);
    Circuit c(3);
    c.append(Gate::x90(0)).append(Gate::zz(0, 1, pi / 4)).barrier().append(Gate::zz(1, 2, pi / 4));
    EXPECT_EQ(two_qubit_gate_count(c), 2u);
    EXPECT_EQ(c.gate_count(), 3u);
    EXPECT_EQ(c.gates().size(), 3u);
    EXPECT_THROW(c.append(Gate::x90(3)), std::invalid_argument);
}

TEST(circuit, remap_rejects_non_injective_map) {
    Circuit c(2);
    c.append(Gate::cnot(0, 1));
    Circuit r = remap_qubits(c, {4, 2}, 5);
    EXPECT_EQ(r.width(), 5u);
    EXPECT_EQ(r.gates()[0].qubits[0], 4u);
    EXPECT_EQ(r.gates()[0].qubits[1], 2u);
    EXPECT_THROW(remap_qubits(c, {1, 1}, 5), std::invalid_argument);
    EXPECT_THROW(remap_qubits(c, {0, 5}, 5), std::invalid_argument);
}

TEST(unitary, empty_circuit_is_identity) {
    DenseMatrix u = unitary(Circuit(1));
    EXPECT_EQ(max_abs_diff(u, DenseMatrix::identity(2)), 0.0);
}

TEST(unitary, two_x90_is_x_up_to_phase) {
    Circuit c(1);
    c.append(Gate::x90(0)).append(Gate::x90(0));
    DenseMatrix x{2, {0, 1, 1, 0}};
    EXPECT_LT(distance_up_to_phase(unitary(c), x), 1e-12);
}

TEST(unitary, zz_phase_convention) {
    Circuit c(2);
    c.append(Gate::zz(0, 1, pi / 4));
    DenseMatrix u = unitary(c);
    Complex minus = std::polar(1.0, -pi / 4);
    Complex plus = std::polar(1.0, pi / 4);
    EXPECT_LT(std::abs(u.at(0, 0) - minus), 1e-12);
    EXPECT_LT(std::abs(u.at(1, 1) - plus), 1e-12);
    EXPECT_LT(std::abs(u.at(2, 2) - plus), 1e-12);
    EXPECT_LT(std::abs(u.at(3, 3) - minus), 1e-12);
    EXPECT_LT(unitarity_error(u), 1e-12);
}

TEST(unitary, cnot_control_is_first_qubit) {
    Circuit c(2);
    c.append(Gate::x90(0)).append(Gate::x90(0)).append(Gate::cnot(0, 1));
    DenseMatrix u = unitary(c);
    // |00> -> |11> (basis index 3) up to phase.
    EXPECT_NEAR(std::abs(u.at(3, 0)), 1.0, 1e-12);
}

TEST(unitary, size_guard) {
    EXPECT_THROW(unitary(Circuit(UNITARY_MAX_QUBITS + 1)), SizeError);
}

TEST(circuit_json, round_trip_is_exact) {
    Circuit c(3);
    c.append(Gate::x90(0))
        .append(Gate::rz(1, 0.1234567890123456789))
        .barrier()
        .append(Gate::zz(0, 2, -1.0 / 3))
        .append(Gate::cphase(2, 1, std::exp(1.0)))
        .append(Gate::swap(0, 1));
    std::string text = circuit_to_json(c);
    Circuit back = circuit_from_json(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(circuit_to_json(back), text);
    EXPECT_EQ(max_abs_diff(unitary(back), unitary(c)), 0.0);
}

TEST(circuit_json, shifted_angle_serializes_identically) {
    Circuit a(1);
    a.append(Gate::rz(0, 0.7));
    Circuit b(1);
    b.append(Gate::rz(0, 0.7 + 2 * pi));
    EXPECT_EQ(circuit_to_json(a), circuit_to_json(b));
    EXPECT_LT(max_abs_diff(unitary(a), unitary(b)), 1e-12);
}

TEST(circuit_json, errors_carry_location) {
    try {
        circuit_from_json("{\"width\": 2, \"ops\": [\n  [\"toffoli\", [0, 1]]\n]}");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_GT(e.column(), 0u);
    }
    EXPECT_THROW(circuit_from_json("{\"width\": 2, \"ops\": [[\"x90\", [2]]]}"), ParseError);
    EXPECT_THROW(circuit_from_json("{\"width\": 2, \"ops\": [[\"zz\", [0]]]}"), ParseError);
    EXPECT_THROW(circuit_from_json("{\"width\": 2, \"ops\": [[\"x90\", [0]]"), ParseError);
}
