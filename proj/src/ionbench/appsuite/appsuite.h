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

#ifndef IONBENCH_APPSUITE_APPSUITE_H
#define IONBENCH_APPSUITE_APPSUITE_H

#include <cstdint>
#include <map>
#include <string>

#include "ionbench/circuit/circuit.h"
#include "ionbench/simulator/histogram.h"

namespace ionbench {

enum class AppFamily { QFT, PhaseEstimation, HamiltonianSimulation, Ingested };

std::string_view family_name(AppFamily family);

/// One benchmark instance: a pre-compilation reference circuit and its ideal
/// outcome distribution over all `reference.width()` qubits.
struct ApplicationInstance {
    AppFamily family;
    /// Free-form label, e.g. "qft-w5-in13" or the ingested family name.
    std::string name;
    Circuit reference;
    Distribution ideal;
    std::map<std::string, double> parameters;
};

constexpr size_t QFT_MAX_WIDTH = 24;

/// QFT benchmark on basis state `input` (bit q = qubit q).
///
/// With `round_trip` false: X gates prepare |input>, then the QFT without the
/// final bit-reversal swaps; the ideal output is uniform.
/// With `round_trip` true: one-qubit gates prepare the (product) Fourier state
/// of |input> directly, then the inverse swap-free QFT maps it back, so the
/// ideal output is the single bitstring `input`.
/// Either way the reference holds width*(width-1)/2 CPHASE gates.
/// Throws std::invalid_argument if width is outside [1, 24] or input >= 2^width.
ApplicationInstance gen_qft(size_t width, uint64_t input, bool round_trip = true);

/// Textbook phase estimation of U = diag(1, e^{2 pi i phase}) with width-1
/// counting qubits (0..width-2, qubit 0 most significant) and the eigenstate
/// |1> on qubit width-1. Throws std::invalid_argument if width < 2 or phase
/// is outside [0, 1).
ApplicationInstance gen_phase_estimation(size_t width, double hidden_phase);

/// First-order Trotter evolution of the open transverse-field Ising chain
///   H = coupling * sum Z_k Z_{k+1} + field * sum X_k
/// from |0...0>, `steps` steps of length dt. Each step is a layer of
/// ZZ(coupling*dt) on neighbours then RX(2*field*dt) on every qubit, the
/// rotation built from X90 and RZ. Throws std::invalid_argument if width < 2.
ApplicationInstance gen_hamiltonian_sim(size_t width, size_t steps, double coupling, double field, double dt = 0.2);

/// One-qubit RX(theta) = exp(-i theta/2 X) as RZ/X90 gates (two X90 pulses).
void append_rx(Circuit &circuit, uint32_t q, double theta);

/// Reads a reference circuit and its ideal distribution. Throws ParseError on
/// malformed files, std::invalid_argument if widths disagree or the
/// distribution total differs from 1 by more than 1e-6.
ApplicationInstance ingest_instance(const std::string &circuit_json, const std::string &distribution_json,
                                    const std::string &name = "ingested");

/// Ideal distribution of phase estimation with m counting bits for `phase`,
/// over the counting register (bit 0 = most significant) in closed form.
Distribution qpe_counting_distribution(size_t counting_bits, double phase);

}  // namespace ionbench

#endif
