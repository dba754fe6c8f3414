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

#include "ionbench/simulator/trajectory.h"

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "ionbench/simulator/kernels.h"
#include "ionbench/util/errors.h"
#include "ionbench/util/rng.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ionbench {

namespace {

void check_width(const Circuit &circuit, size_t max_qubits) {
    if (circuit.width() > max_qubits) {
        throw SizeError("simulation of width " + std::to_string(circuit.width()) + " exceeds the limit of " +
                        std::to_string(max_qubits) + " qubits");
    }
    if (circuit.width() >= 63) {
        throw SizeError("simulation width must be below 63 qubits");
    }
}

/// A gate prepared for repeated noisy execution.
struct Step {
    GateKind kind;
    uint32_t a;
    uint32_t b;
    double angle;
    Mat2 matrix;     // 1Q steps only
    Mat4 matrix_2q;  // 2Q steps only
    double eps;   // 0 for virtual gates
};

struct Fault {
    size_t step;
    uint8_t pauli;  // 1..3 for one qubit; 1..15 (a + 4 b) for two qubits
};

bool is_diagonal(const Mat2 &m) {
    return m[1] == Complex(0) && m[2] == Complex(0);
}

bool is_identity(const Mat2 &m) {
    return m[1] == Complex(0) && m[2] == Complex(0) && m[0] == Complex(1) && m[3] == Complex(1);
}

/// Pending one-qubit operations per qubit, fused into a single 2x2 matrix
/// until something that does not commute with them touches the qubit.
class PendingOps {
   public:
    explicit PendingOps(size_t width) : ops_(width, pauli_mats::I) {}

    void push(uint32_t q, const Mat2 &m) { ops_[q] = mat2_mul(m, ops_[q]); }

    void flush(std::span<Complex> state, uint32_t q) {
        Mat2 &m = ops_[q];
        if (is_identity(m)) {
            return;
        }
        if (is_diagonal(m)) {
            kernels::apply_diag(state, q, m[0], m[3]);
        } else {
            kernels::apply_mat2(state, q, m);
        }
        m = pauli_mats::I;
    }

    bool is_diagonal_on(uint32_t q) const { return is_diagonal(ops_[q]); }
    bool is_identity_on(uint32_t q) const { return is_identity(ops_[q]); }

    /// Removes the pending ops on a and b, returned as one two-qubit matrix
    /// with local index 2*bit(a) + bit(b).
    Mat4 take_pair(uint32_t a, uint32_t b) {
        const Mat2 &pa = ops_[a];
        const Mat2 &pb = ops_[b];
        Mat4 m;
        for (size_t r = 0; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                m[r * 4 + c] = pa[(r >> 1) * 2 + (c >> 1)] * pb[(r & 1) * 2 + (c & 1)];
            }
        }
        ops_[a] = pauli_mats::I;
        ops_[b] = pauli_mats::I;
        return m;
    }

    void flush_all(std::span<Complex> state) {
        for (uint32_t q = 0; q < ops_.size(); q++) {
            flush(state, q);
        }
    }

   private:
    std::vector<Mat2> ops_;
};

class TrajectoryRunner {
   public:
    TrajectoryRunner(const Circuit &circuit, const NoiseModel &noise, const SimOptions &options)
        : width_(circuit.width()) {
        size_t index = 0;
        for (const auto &gate : circuit.gates()) {
            if (!gate.is_native()) {
                throw std::invalid_argument("run_shots: gate '" + std::string(gate_name(gate.kind)) +
                                            "' is not native; decompose the circuit first");
            }
            Step s{gate.kind, gate.qubits[0], gate.qubits[1], gate.angle, pauli_mats::I, {}, 0};
            switch (gate.kind) {
                case GateKind::X90:
                case GateKind::Y90:
                    s.matrix = gate_matrix_1q(gate);
                    s.eps = noise.one_qubit(s.a);
                    break;
                case GateKind::RZ:
                    s.matrix = gate_matrix_1q(gate);
                    break;
                default:
                    s.matrix_2q = gate_matrix_2q(gate);
                    s.eps = noise.two_qubit(s.a, s.b);
                    break;
            }
            if (!options.gate_noise_scale.empty()) {
                if (options.gate_noise_scale.size() != circuit.gate_count()) {
                    throw std::invalid_argument("gate_noise_scale must have one entry per gate");
                }
                s.eps = std::min(1.0, s.eps * options.gate_noise_scale[index]);
            }
            any_noise_ = any_noise_ || s.eps > 0;
            steps_.push_back(s);
            index++;
        }
        for (uint32_t q = 0; q < width_; q++) {
            spam_.push_back(noise.spam(q));
        }
    }

    /// Draws the fault locations of one shot.
    void sample_faults(Rng &rng, std::vector<Fault> &faults) const {
        faults.clear();
        if (!any_noise_) {
            return;
        }
        for (size_t k = 0; k < steps_.size(); k++) {
            const Step &s = steps_[k];
            if (s.eps > 0 && uniform01(rng) < s.eps) {
                bool two = s.kind == GateKind::XX || s.kind == GateKind::ZZ;
                faults.push_back({k, static_cast<uint8_t>(1 + uniform_index(rng, two ? 15 : 3))});
            }
        }
    }

    void evolve(StateVector &state, std::span<const Fault> faults) const {
        state.assign(size_t{1} << width_, Complex(0));
        state[0] = 1;
        PendingOps pending(width_);
        size_t next_fault = 0;
        for (size_t k = 0; k < steps_.size(); k++) {
            const Step &s = steps_[k];
            switch (s.kind) {
                case GateKind::X90:
                case GateKind::Y90:
                case GateKind::RZ:
                    pending.push(s.a, s.matrix);
                    break;
                case GateKind::ZZ:
                    if (pending.is_diagonal_on(s.a) && pending.is_diagonal_on(s.b)) {
                        kernels::apply_zz(state, s.a, s.b, s.angle);
                    } else {
                        kernels::apply_mat4(state, s.a, s.b, mat4_mul(s.matrix_2q, pending.take_pair(s.a, s.b)));
                    }
                    break;
                default:
                    if (pending.is_identity_on(s.a) && pending.is_identity_on(s.b)) {
                        kernels::apply_xx(state, s.a, s.b, s.angle);
                    } else {
                        kernels::apply_mat4(state, s.a, s.b, mat4_mul(s.matrix_2q, pending.take_pair(s.a, s.b)));
                    }
                    break;
            }
            if (next_fault < faults.size() && faults[next_fault].step == k) {
                uint8_t p = faults[next_fault].pauli;
                if (s.kind == GateKind::X90 || s.kind == GateKind::Y90) {
                    pending.push(s.a, pauli_mats::ALL[p]);
                } else {
                    pending.push(s.a, pauli_mats::ALL[p & 3]);
                    pending.push(s.b, pauli_mats::ALL[p >> 2]);
                }
                next_fault++;
            }
        }
        pending.flush_all(state);
    }

    Bits measure(std::span<const Complex> state, Rng &rng) const {
        double u = uniform01(rng);
        double acc = 0;
        size_t last_nonzero = 0;
        for (size_t i = 0; i < state.size(); i++) {
            double p = std::norm(state[i]);
            if (p > 0) {
                last_nonzero = i;
                acc += p;
                if (u < acc) {
                    return i;
                }
            }
        }
        return last_nonzero;
    }

    Bits apply_spam(Bits outcome, Rng &rng) const {
        for (uint32_t q = 0; q < width_; q++) {
            if (spam_[q] > 0 && uniform01(rng) < spam_[q]) {
                outcome ^= Bits{1} << q;
            }
        }
        return outcome;
    }

    size_t width() const { return width_; }

   private:
    size_t width_;
    std::vector<Step> steps_;
    std::vector<double> spam_;
    bool any_noise_ = false;
};

}  // namespace

Histogram run_shots(const Circuit &circuit, const NoiseModel &noise, uint64_t n_shots, uint64_t seed,
                    const SimOptions &options) {
    check_width(circuit, options.max_qubits);
    noise.validate();
    const TrajectoryRunner runner(circuit, noise, options);

    // Fault-free shots all share one final state, computed on first use.
    StateVector ideal;
    std::once_flag ideal_ready;

    std::vector<Bits> outcomes(n_shots);
    const auto n = static_cast<ptrdiff_t>(n_shots);
    bool outer_parallel = false;
#ifdef _OPENMP
    outer_parallel = n_shots > 1 && omp_get_max_threads() > 1;
#endif
#pragma omp parallel if (outer_parallel)
    {
        StateVector scratch;
        std::vector<Fault> faults;
#pragma omp for schedule(dynamic)
        for (ptrdiff_t shot = 0; shot < n; shot++) {
            Rng rng = make_rng(seed, "shot", static_cast<uint64_t>(shot));
            runner.sample_faults(rng, faults);
            Bits outcome;
            if (faults.empty()) {
                std::call_once(ideal_ready, [&] { runner.evolve(ideal, {}); });
                outcome = runner.measure(ideal, rng);
            } else {
                runner.evolve(scratch, faults);
                outcome = runner.measure(scratch, rng);
            }
            outcomes[static_cast<size_t>(shot)] = runner.apply_spam(outcome, rng);
        }
    }

    Histogram h{circuit.width(), {}};
    for (Bits b : outcomes) {
        h.add(b);
    }
    return h;
}

StateVector simulate_state(const Circuit &circuit, size_t max_qubits) {
    check_width(circuit, max_qubits);
    StateVector state = zero_state(circuit.width());
    for (const auto &e : circuit.elements()) {
        if (const auto *g = std::get_if<Gate>(&e)) {
            kernels::apply_gate(state, *g);
        }
    }
    return state;
}

Distribution ideal_distribution(const Circuit &circuit, size_t max_qubits) {
    StateVector state = simulate_state(circuit, max_qubits);
    Distribution d{circuit.width(), {}};
    for (size_t i = 0; i < state.size(); i++) {
        double p = std::norm(state[i]);
        if (p >= 1e-15) {
            d.probs[i] = p;
        }
    }
    return renormalized(d);
}

}  // namespace ionbench
