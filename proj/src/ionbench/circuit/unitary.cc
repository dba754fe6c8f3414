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

#include "ionbench/circuit/unitary.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ionbench/util/errors.h"

namespace ionbench {

DenseMatrix DenseMatrix::identity(size_t dim) {
    DenseMatrix m{dim, std::vector<Complex>(dim * dim, 0)};
    for (size_t k = 0; k < dim; k++) {
        m.at(k, k) = 1;
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (dim != rhs.dim) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    DenseMatrix out{dim, std::vector<Complex>(dim * dim, 0)};
    for (size_t r = 0; r < dim; r++) {
        for (size_t k = 0; k < dim; k++) {
            Complex a = at(r, k);
            if (a == Complex(0)) {
                continue;
            }
            for (size_t c = 0; c < dim; c++) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out{dim, std::vector<Complex>(dim * dim, 0)};
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

void apply_gate_left(DenseMatrix &m, const Gate &gate) {
    const size_t dim = m.dim;
    if (gate.arity() == 1) {
        Mat2 g = gate_matrix_1q(gate);
        size_t bit = size_t{1} << gate.qubits[0];
        for (size_t r0 = 0; r0 < dim; r0++) {
            if (r0 & bit) {
                continue;
            }
            size_t r1 = r0 | bit;
            for (size_t c = 0; c < dim; c++) {
                Complex a = m.at(r0, c);
                Complex b = m.at(r1, c);
                m.at(r0, c) = g[0] * a + g[1] * b;
                m.at(r1, c) = g[2] * a + g[3] * b;
            }
        }
        return;
    }
    Mat4 g = gate_matrix_2q(gate);
    // Local index 2*bit(q0) + bit(q1).
    size_t b0 = size_t{1} << gate.qubits[0];
    size_t b1 = size_t{1} << gate.qubits[1];
    for (size_t base = 0; base < dim; base++) {
        if (base & (b0 | b1)) {
            continue;
        }
        size_t rows[4] = {base, base | b1, base | b0, base | b0 | b1};
        for (size_t c = 0; c < dim; c++) {
            Complex v[4];
            for (size_t k = 0; k < 4; k++) {
                v[k] = m.at(rows[k], c);
            }
            for (size_t k = 0; k < 4; k++) {
                Complex acc = 0;
                for (size_t j = 0; j < 4; j++) {
                    acc += g[k * 4 + j] * v[j];
                }
                m.at(rows[k], c) = acc;
            }
        }
    }
}

DenseMatrix unitary(const Circuit &circuit) {
    if (circuit.width() > UNITARY_MAX_QUBITS) {
        throw SizeError("unitary: width " + std::to_string(circuit.width()) + " exceeds the " +
                        std::to_string(UNITARY_MAX_QUBITS) + "-qubit guard");
    }
    DenseMatrix u = DenseMatrix::identity(size_t{1} << circuit.width());
    for (const auto &e : circuit.elements()) {
        if (const auto *g = std::get_if<Gate>(&e)) {
            apply_gate_left(u, *g);
        }
    }
    return u;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < a.data.size(); k++) {
        worst = std::max(worst, std::abs(a.data[k] - b.data[k]));
    }
    return worst;
}

double distance_up_to_phase(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    size_t pivot = 0;
    for (size_t k = 1; k < b.data.size(); k++) {
        if (std::abs(b.data[k]) > std::abs(b.data[pivot])) {
            pivot = k;
        }
    }
    Complex phase = 1;
    if (std::abs(b.data[pivot]) > 0 && std::abs(a.data[pivot]) > 0) {
        phase = a.data[pivot] / b.data[pivot];
        phase /= std::abs(phase);
    }
    double worst = 0;
    for (size_t k = 0; k < a.data.size(); k++) {
        worst = std::max(worst, std::abs(a.data[k] - phase * b.data[k]));
    }
    return worst;
}

double unitarity_error(const DenseMatrix &u) {
    return max_abs_diff(u.adjoint() * u, DenseMatrix::identity(u.dim));
}

}  // namespace ionbench
