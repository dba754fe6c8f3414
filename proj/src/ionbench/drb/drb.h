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

#ifndef IONBENCH_DRB_DRB_H
#define IONBENCH_DRB_DRB_H

#include <cstdint>
#include <string>
#include <vector>

#include "ionbench/circuit/circuit.h"
#include "ionbench/simulator/noise_model.h"
#include "ionbench/simulator/trajectory.h"
#include "ionbench/util/bits.h"

namespace ionbench {

/// Shape of a direct randomized benchmarking experiment.
struct DrbDesign {
    size_t n_qubits = 2;
    std::vector<size_t> depths;
    size_t circuits_per_depth = 4;
    size_t shots_per_circuit = 100;
    /// Probability that a core layer is the entangler (two-qubit designs).
    double p_2q = 0.25;

    /// 1Q: depths {1, 10, 100, 1000}, 4 circuits, 100 shots.
    static DrbDesign one_qubit_default();
    /// 2Q: depths {1, 5, 22, 100}, 4 circuits, 100 shots.
    static DrbDesign two_qubit_default(double p_2q);
    /// 2Q deep: depths {1, 112, 223, ..., 1000}.
    static DrbDesign two_qubit_deep(double p_2q, size_t shots_per_circuit = 100);

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    bool operator==(const DrbDesign &) const = default;
};

struct DrbCircuit {
    Circuit circuit;
    Bits ideal_outcome = 0;
    /// Gate index (barriers skipped) at which core layer k starts; one extra
    /// trailing entry marks the start of the inversion layer.
    std::vector<size_t> layer_start;
};

/// Random 1Q-Clifford prep on each qubit, `depth` random core layers, then the
/// shortest native sequence inverting everything so far. A one-qubit core
/// layer is X90 or Y90 with equal probability; a two-qubit core layer is
/// XX(pi/4) with probability p_2q, else an independent X90/Y90 on each qubit.
/// Noiselessly the circuit returns to |0...0>.
DrbCircuit sample_drb_circuit(const DrbDesign &design, size_t depth, uint64_t seed);

struct DrbRecord {
    size_t depth = 0;
    size_t circuit_index = 0;
    uint64_t successes = 0;
    uint64_t shots = 0;

    bool operator==(const DrbRecord &) const = default;
};

struct DrbDataset {
    DrbDesign design;
    std::vector<DrbRecord> records;

    /// Distinct depths in increasing order, and pooled success fraction at each.
    std::vector<size_t> depths() const;
    std::vector<double> mean_success() const;
    bool operator==(const DrbDataset &) const = default;
};

struct DrbRunOptions {
    SimOptions sim;
    /// When set, ε of every core-layer gate at depth index >= `drift_after`
    /// is multiplied by `drift_factor`.
    size_t drift_after = SIZE_MAX;
    double drift_factor = 1;
};

/// Samples and simulates the full design on logical qubits 0..n-1 with
/// `noise` (already expressed on those qubits). Circuit k at depth index i
/// uses stream (seed, "drb-circuit", i * N_c + k) and its shots the stream
/// (seed, "drb-shots", i * N_c + k).
DrbDataset run_drb(const DrbDesign &design, const NoiseModel &noise, uint64_t seed, const DrbRunOptions &options = {});

/// {"design": {...}, "records": [{"depth", "circuit_index", "successes", "shots"}]}
std::string drb_dataset_to_json(const DrbDataset &dataset);
/// Throws ParseError on malformed text.
DrbDataset drb_dataset_from_json(const std::string &text);

}  // namespace ionbench

#endif
