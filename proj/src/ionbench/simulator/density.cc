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

#include "ionbench/simulator/density.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "ionbench/util/errors.h"

namespace ionbench {

namespace {

/// Row-major density matrix over `width` qubits.
class DensityState {
   public:
    explicit DensityState(size_t width) : dim_(size_t{1} << width), rho_(dim_ * dim_, Complex(0)) {
        rho_[0] = 1;
    }

    /// rho -> U rho U^dagger for a gate on `qubits` (1 or 2 entries).
    void apply_unitary(const Gate &gate) {
        if (gate.arity() == 1) {
            Mat2 m = gate_matrix_1q(gate);
            left_1q(gate.qubits[0], m);
            transpose_conjugate();
            left_1q(gate.qubits[0], m);
            transpose_conjugate();
        } else {
            Mat4 m = gate_matrix_2q(gate);
            left_2q(gate.qubits[0], gate.qubits[1], m);
            transpose_conjugate();
            left_2q(gate.qubits[0], gate.qubits[1], m);
            transpose_conjugate();
        }
    }

    /// rho -> (1 - eps) rho + eps / (4^n - 1) sum_{P != I on support} P rho P.
    void depolarize(const std::vector<uint32_t> &support, double eps) {
        if (eps == 0) {
            return;
        }
        const size_t n = support.size();
        const size_t num_paulis = size_t{1} << (2 * n);
        std::vector<Complex> mixed(rho_.size(), Complex(0));
        for (size_t code = 1; code < num_paulis; code++) {
            add_pauli_conjugation(support, code, mixed);
        }
        const double w = eps / static_cast<double>(num_paulis - 1);
        for (size_t k = 0; k < rho_.size(); k++) {
            rho_[k] = (1 - eps) * rho_[k] + w * mixed[k];
        }
    }

    std::vector<double> diagonal() const {
        std::vector<double> p(dim_);
        for (size_t i = 0; i < dim_; i++) {
            p[i] = rho_[i * dim_ + i].real();
        }
        return p;
    }

   private:
    void left_1q(uint32_t q, const Mat2 &m) {
        const size_t bit = size_t{1} << q;
        for (size_t r0 = 0; r0 < dim_; r0++) {
            if (r0 & bit) {
                continue;
            }
            size_t r1 = r0 | bit;
            for (size_t c = 0; c < dim_; c++) {
                Complex a = rho_[r0 * dim_ + c];
                Complex b = rho_[r1 * dim_ + c];
                rho_[r0 * dim_ + c] = m[0] * a + m[1] * b;
                rho_[r1 * dim_ + c] = m[2] * a + m[3] * b;
            }
        }
    }

    void left_2q(uint32_t qa, uint32_t qb, const Mat4 &m) {
        const size_t ba = size_t{1} << qa;
        const size_t bb = size_t{1} << qb;
        for (size_t base = 0; base < dim_; base++) {
            if (base & (ba | bb)) {
                continue;
            }
            const size_t rows[4] = {base, base | bb, base | ba, base | ba | bb};
            for (size_t c = 0; c < dim_; c++) {
                Complex v[4];
                for (size_t k = 0; k < 4; k++) {
                    v[k] = rho_[rows[k] * dim_ + c];
                }
                for (size_t k = 0; k < 4; k++) {
                    rho_[rows[k] * dim_ + c] =
                        m[k * 4] * v[0] + m[k * 4 + 1] * v[1] + m[k * 4 + 2] * v[2] + m[k * 4 + 3] * v[3];
                }
            }
        }
    }

    /// rho -> rho^dagger as a storage transform; two left multiplications
    /// separated by this give U rho U^dagger.
    void transpose_conjugate() {
        for (size_t r = 0; r < dim_; r++) {
            for (size_t c = r; c < dim_; c++) {
                Complex a = rho_[r * dim_ + c];
                rho_[r * dim_ + c] = std::conj(rho_[c * dim_ + r]);
                rho_[c * dim_ + r] = std::conj(a);
            }
        }
    }

    /// out += P rho P for the Pauli string `code` (2 bits per support qubit:
    /// 0 = I, 1 = X, 2 = Y, 3 = Z).
    void add_pauli_conjugation(const std::vector<uint32_t> &support, size_t code, std::vector<Complex> &out) const {
        size_t flip = 0;
        std::vector<std::pair<size_t, Complex>> phases;  // (bit, phase when that bit is 1 vs 0)
        for (size_t k = 0; k < support.size(); k++) {
            size_t p = (code >> (2 * k)) & 3;
            size_t bit = size_t{1} << support[k];
            if (p == 1 || p == 2) {
                flip |= bit;
            }
        }
        // P|i> = phase(i) |i ^ flip>, so (P rho P)[r][c] = phase(r^flip) conj(phase(c^flip)) rho[r^flip][c^flip].
        auto phase_of = [&](size_t index) {
            Complex ph = 1;
            for (size_t k = 0; k < support.size(); k++) {
                size_t p = (code >> (2 * k)) & 3;
                bool one = (index >> support[k]) & 1;
                if (p == 2) {
                    ph *= one ? Complex(0, -1) : Complex(0, 1);  // Y|0> = i|1>, Y|1> = -i|0>
                } else if (p == 3 && one) {
                    ph = -ph;
                }
            }
            return ph;
        };
        std::vector<Complex> ph(dim_);
        for (size_t i = 0; i < dim_; i++) {
            ph[i] = phase_of(i);
        }
        for (size_t r = 0; r < dim_; r++) {
            size_t rs = r ^ flip;
            for (size_t c = 0; c < dim_; c++) {
                size_t cs = c ^ flip;
                out[r * dim_ + c] += ph[rs] * std::conj(ph[cs]) * rho_[rs * dim_ + cs];
            }
        }
    }

    size_t dim_;
    std::vector<Complex> rho_;
};

}  // namespace

Distribution exact_channel(const Circuit &circuit, const NoiseModel &noise) {
    if (circuit.width() > EXACT_CHANNEL_MAX_QUBITS) {
        throw SizeError("exact_channel: width " + std::to_string(circuit.width()) + " exceeds the " +
                        std::to_string(EXACT_CHANNEL_MAX_QUBITS) + "-qubit guard");
    }
    noise.validate();
    DensityState rho(circuit.width());
    for (const auto &gate : circuit.gates()) {
        if (!gate.is_native()) {
            throw std::invalid_argument("exact_channel: gate '" + std::string(gate_name(gate.kind)) +
                                        "' is not native");
        }
        rho.apply_unitary(gate);
        switch (gate.kind) {
            case GateKind::X90:
            case GateKind::Y90:
                rho.depolarize({gate.qubits[0]}, noise.one_qubit(gate.qubits[0]));
                break;
            case GateKind::XX:
            case GateKind::ZZ:
                rho.depolarize({gate.qubits[0], gate.qubits[1]}, noise.two_qubit(gate.qubits[0], gate.qubits[1]));
                break;
            default:
                break;
        }
    }
    std::vector<double> p = rho.diagonal();
    for (uint32_t q = 0; q < circuit.width(); q++) {
        double f = noise.spam(q);
        if (f == 0) {
            continue;
        }
        std::vector<double> flipped(p.size());
        size_t bit = size_t{1} << q;
        for (size_t i = 0; i < p.size(); i++) {
            flipped[i] = (1 - f) * p[i] + f * p[i ^ bit];
        }
        p.swap(flipped);
    }
    Distribution d{circuit.width(), {}};
    for (size_t i = 0; i < p.size(); i++) {
        if (p[i] > 0) {
            d.probs[i] = p[i];
        }
    }
    return d;
}

}  // namespace ionbench
