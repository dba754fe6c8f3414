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

#ifndef IONBENCH_SIMULATOR_TRAJECTORY_H
#define IONBENCH_SIMULATOR_TRAJECTORY_H

#include <cstdint>
#include <span>

#include "ionbench/circuit/circuit.h"
#include "ionbench/simulator/histogram.h"
#include "ionbench/simulator/kernels.h"
#include "ionbench/simulator/noise_model.h"

namespace ionbench {

constexpr size_t DEFAULT_MAX_SIM_QUBITS = 26;

struct SimOptions {
    /// Refuse circuits wider than this (2^width amplitudes per worker).
    size_t max_qubits = DEFAULT_MAX_SIM_QUBITS;
    /// Optional per-gate multiplier on the depolarizing rate, indexed by gate
    /// position with barriers skipped. Used to inject drift in diagnostics.
    std::span<const double> gate_noise_scale{};
};

/// Samples `n_shots` noisy trajectories of a native circuit.
///
/// Each shot starts in |0...0>; after every physical gate (X90, Y90, XX, ZZ)
/// on n qubits, with probability eps one of the 4^n - 1 non-identity Paulis on
/// its support is applied, chosen uniformly. All qubits are then measured and
/// each readout bit flipped with its SPAM probability. Shot k draws from the
/// stream (seed, "shot", k), so the histogram is independent of thread count.
///
/// Throws std::invalid_argument on non-native gates, SizeError on width over
/// the limit.
Histogram run_shots(const Circuit &circuit, const NoiseModel &noise, uint64_t n_shots, uint64_t seed,
                    const SimOptions &options = {});

/// Noiseless state of any circuit (composite gates allowed).
StateVector simulate_state(const Circuit &circuit, size_t max_qubits = DEFAULT_MAX_SIM_QUBITS);

/// Exact noiseless outcome distribution; entries below 1e-15 are pruned and the
/// rest renormalized.
Distribution ideal_distribution(const Circuit &circuit, size_t max_qubits = DEFAULT_MAX_SIM_QUBITS);

}  // namespace ionbench

#endif
