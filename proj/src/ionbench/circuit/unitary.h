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

#ifndef IONBENCH_CIRCUIT_UNITARY_H
#define IONBENCH_CIRCUIT_UNITARY_H

#include <cstddef>
#include <vector>

#include "ionbench/circuit/circuit.h"

namespace ionbench {

/// Dense square complex matrix, row-major. Row/column index bit q is qubit q.
struct DenseMatrix {
    size_t dim = 0;
    std::vector<Complex> data;

    static DenseMatrix identity(size_t dim);
    Complex &at(size_t row, size_t col) { return data[row * dim + col]; }
    const Complex &at(size_t row, size_t col) const { return data[row * dim + col]; }

    DenseMatrix operator*(const DenseMatrix &rhs) const;
    DenseMatrix adjoint() const;
};

constexpr size_t UNITARY_MAX_QUBITS = 12;

/// Product of the gate unitaries of `circuit` in circuit order (first gate
/// rightmost). Throws SizeError if the width exceeds UNITARY_MAX_QUBITS.
DenseMatrix unitary(const Circuit &circuit);

/// Left-multiplies `matrix` by `gate` acting on a register of `num_qubits`.
void apply_gate_left(DenseMatrix &matrix, const Gate &gate);

/// Largest entrywise |a - b|.
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

/// Largest entrywise |a - e^{i phi} b| minimised over the global phase phi,
/// with phi fixed from the largest entry of b.
double distance_up_to_phase(const DenseMatrix &a, const DenseMatrix &b);

/// Largest entrywise deviation of U^dagger U from identity.
double unitarity_error(const DenseMatrix &u);

}  // namespace ionbench

#endif
