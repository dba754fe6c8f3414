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

#ifndef IONBENCH_ORACLES_ORACLES_H
#define IONBENCH_ORACLES_ORACLES_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ionbench/circuit/circuit.h"
#include "ionbench/circuit/unitary.h"
#include "ionbench/simulator/histogram.h"
#include "ionbench/simulator/noise_model.h"

namespace ionbench::oracles {

constexpr size_t SUBSET_ORACLE_MAX = 12;
constexpr size_t DENSITY_ORACLE_MAX_QUBITS = 3;

/// Sum over all m-element subsets S of prod_{v in S} f_v prod_{v not in S} (1 - f_v).
/// Throws SizeError above 12 entries, std::invalid_argument if m > size.
double subset_enumeration_pmf(std::span<const double> freqs, size_t m);

/// rho -> (1 - eps) U rho U^dag + eps/(4^n - 1) sum_{P != I} P U rho U^dag P,
/// each term built as a full-register matrix product. Throws SizeError above
/// 3 qubits.
DenseMatrix density_channel_step(const DenseMatrix &rho, const Gate &gate, double eps);

/// Outcome distribution of a native circuit on <= 3 qubits through
/// density_channel_step, followed by independent readout flips.
Distribution density_channel_distribution(const Circuit &circuit, const NoiseModel &noise);

struct CliffordTables {
    /// The 24 one-qubit Cliffords as X90/Y90/RZ(pi/2) sequences; entry 0 is empty.
    std::vector<std::vector<Gate>> one_qubit;
    /// Unitary of each entry.
    std::vector<DenseMatrix> one_qubit_unitaries;
};

/// Enumerates the one-qubit Clifford group by breadth-first search over
/// unitaries modulo global phase.
CliffordTables clifford_tables();

/// Index of `u` in the table up to global phase, or -1.
int find_clifford(const CliffordTables &tables, const DenseMatrix &u);

/// Distance of a 2Q DRB circuit's unitary from the identity up to global phase.
double inversion_error(const Circuit &drb_circuit);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runs every oracle comparison against the main code paths.
std::vector<CheckResult> self_check(uint64_t seed = 1);

/// {"passed": bool, "checks": [{"name", "passed", "detail"}]}
std::string self_check_report(const std::vector<CheckResult> &checks);

}  // namespace ionbench::oracles

#endif
