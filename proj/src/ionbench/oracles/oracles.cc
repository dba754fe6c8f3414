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

#include "ionbench/oracles/oracles.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ionbench/appsuite/appsuite.h"
#include "ionbench/compiler/decompose.h"
#include "ionbench/compiler/variants.h"
#include "ionbench/drb/drb.h"
#include "ionbench/drb/fit.h"
#include "ionbench/mitigation/mitigation.h"
#include "ionbench/simulator/density.h"
#include "ionbench/simulator/trajectory.h"
#include "ionbench/util/errors.h"
#include "ionbench/util/rng.h"
#include "json.hpp"

namespace ionbench::oracles {

double subset_enumeration_pmf(std::span<const double> freqs, size_t m) {
    const size_t n = freqs.size();
    if (n > SUBSET_ORACLE_MAX) {
        throw SizeError("subset_enumeration_pmf: at most 12 variants");
    }
    if (m > n) {
        throw std::invalid_argument("subset_enumeration_pmf: m exceeds the number of variants");
    }
    double total = 0;
    for (uint32_t mask = 0; mask < (1u << n); mask++) {
        if (static_cast<size_t>(std::popcount(mask)) != m) {
            continue;
        }
        double term = 1;
        for (size_t v = 0; v < n; v++) {
            term *= ((mask >> v) & 1) ? freqs[v] : 1 - freqs[v];
        }
        total += term;
    }
    return total;
}

namespace {

/// Embeds a local operator on `support` into a register of `n` qubits.
/// Local index: first support qubit is the most significant bit.
DenseMatrix embed(const std::vector<Complex> &local, const std::vector<uint32_t> &support, size_t n) {
    const size_t dim = size_t{1} << n;
    const size_t k = support.size();
    const size_t ldim = size_t{1} << k;
    DenseMatrix full{dim, std::vector<Complex>(dim * dim, 0)};
    uint64_t mask = 0;
    for (uint32_t q : support) {
        mask |= uint64_t{1} << q;
    }
    auto local_index = [&](size_t i) {
        size_t li = 0;
        for (size_t s = 0; s < k; s++) {
            li = (li << 1) | ((i >> support[s]) & 1);
        }
        return li;
    };
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            if ((r & ~mask) != (c & ~mask)) {
                continue;
            }
            full.at(r, c) = local[local_index(r) * ldim + local_index(c)];
        }
    }
    return full;
}

std::vector<Complex> kron(const Mat2 &a, const Mat2 &b) {
    std::vector<Complex> out(16);
    for (size_t r1 = 0; r1 < 2; r1++) {
        for (size_t c1 = 0; c1 < 2; c1++) {
            for (size_t r2 = 0; r2 < 2; r2++) {
                for (size_t c2 = 0; c2 < 2; c2++) {
                    out[(2 * r1 + r2) * 4 + (2 * c1 + c2)] = a[2 * r1 + c1] * b[2 * r2 + c2];
                }
            }
        }
    }
    return out;
}

std::vector<Complex> gate_local(const Gate &gate) {
    if (gate.arity() == 1) {
        Mat2 m = gate_matrix_1q(gate);
        return {m.begin(), m.end()};
    }
    Mat4 m = gate_matrix_2q(gate);
    return {m.begin(), m.end()};
}

DenseMatrix conjugate(const DenseMatrix &u, const DenseMatrix &rho) {
    return u * rho * u.adjoint();
}

}  // namespace

DenseMatrix density_channel_step(const DenseMatrix &rho, const Gate &gate, double eps) {
    if (rho.dim > (size_t{1} << DENSITY_ORACLE_MAX_QUBITS)) {
        throw SizeError("density_channel_step: at most 3 qubits");
    }
    const size_t n = static_cast<size_t>(std::countr_zero(rho.dim));
    std::vector<uint32_t> support(gate.qubits.begin(), gate.qubits.begin() + static_cast<ptrdiff_t>(gate.arity()));
    for (uint32_t q : support) {
        if (q >= n) {
            throw std::invalid_argument("density_channel_step: qubit index out of range");
        }
    }
    DenseMatrix after = conjugate(embed(gate_local(gate), support, n), rho);
    if (eps == 0) {
        return after;
    }
    DenseMatrix out{after.dim, std::vector<Complex>(after.data.size(), 0)};
    auto accumulate = [&](const DenseMatrix &term, double w) {
        for (size_t i = 0; i < out.data.size(); i++) {
            out.data[i] += w * term.data[i];
        }
    };
    accumulate(after, 1 - eps);
    if (support.size() == 1) {
        for (size_t p = 1; p < 4; p++) {
            const Mat2 &m = pauli_mats::ALL[p];
            accumulate(conjugate(embed({m.begin(), m.end()}, support, n), after), eps / 3);
        }
    } else {
        for (size_t p = 1; p < 16; p++) {
            accumulate(conjugate(embed(kron(pauli_mats::ALL[p >> 2], pauli_mats::ALL[p & 3]), support, n), after),
                       eps / 15);
        }
    }
    return out;
}

Distribution density_channel_distribution(const Circuit &circuit, const NoiseModel &noise) {
    const size_t n = circuit.width();
    if (n > DENSITY_ORACLE_MAX_QUBITS) {
        throw SizeError("density_channel_distribution: at most 3 qubits");
    }
    const size_t dim = size_t{1} << n;
    DenseMatrix rho{dim, std::vector<Complex>(dim * dim, 0)};
    rho.at(0, 0) = 1;
    for (const Gate &g : circuit.gates()) {
        double eps = 0;
        if (g.kind == GateKind::X90 || g.kind == GateKind::Y90) {
            eps = noise.one_qubit(g.qubits[0]);
        } else if (g.kind == GateKind::XX || g.kind == GateKind::ZZ) {
            eps = noise.two_qubit(g.qubits[0], g.qubits[1]);
        } else if (g.kind != GateKind::RZ) {
            throw std::invalid_argument("density_channel_distribution: non-native gate");
        }
        rho = density_channel_step(rho, g, eps);
    }
    // Readout: outcome o observed from true state s with prod of flip probabilities.
    Distribution d{n, {}};
    for (size_t o = 0; o < dim; o++) {
        double p = 0;
        for (size_t s = 0; s < dim; s++) {
            double w = rho.at(s, s).real();
            for (uint32_t q = 0; q < n; q++) {
                double f = noise.spam(q);
                w *= (((o ^ s) >> q) & 1) ? f : 1 - f;
            }
            p += w;
        }
        if (p > 0) {
            d.probs[o] = p;
        }
    }
    return d;
}

namespace {

DenseMatrix gate_unitary_1q(const Gate &g) {
    Mat2 m = gate_matrix_1q(g);
    return {2, {m.begin(), m.end()}};
}

bool equal_up_to_phase(const DenseMatrix &a, const DenseMatrix &b, double tol) {
    return distance_up_to_phase(a, b) < tol;
}

}  // namespace

int find_clifford(const CliffordTables &tables, const DenseMatrix &u) {
    for (size_t k = 0; k < tables.one_qubit_unitaries.size(); k++) {
        if (equal_up_to_phase(u, tables.one_qubit_unitaries[k], 1e-9)) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

CliffordTables clifford_tables() {
    const std::vector<Gate> moves{Gate::rz(0, std::numbers::pi / 2), Gate::x90(0), Gate::y90(0)};
    CliffordTables t;
    t.one_qubit.push_back({});
    t.one_qubit_unitaries.push_back(DenseMatrix::identity(2));
    for (size_t head = 0; head < t.one_qubit.size(); head++) {
        for (const Gate &g : moves) {
            DenseMatrix u = gate_unitary_1q(g) * t.one_qubit_unitaries[head];
            if (find_clifford(t, u) >= 0) {
                continue;
            }
            std::vector<Gate> seq = t.one_qubit[head];
            seq.push_back(g);
            t.one_qubit.push_back(std::move(seq));
            t.one_qubit_unitaries.push_back(std::move(u));
        }
    }
    return t;
}

double inversion_error(const Circuit &drb_circuit) {
    return distance_up_to_phase(unitary(drb_circuit), DenseMatrix::identity(size_t{1} << drb_circuit.width()));
}

namespace {

Circuit random_native_circuit(Rng &rng, size_t width, size_t gates) {
    Circuit c(width);
    for (size_t k = 0; k < gates; k++) {
        auto q = static_cast<uint32_t>(uniform_index(rng, width));
        uint64_t kind = uniform_index(rng, width > 1 ? 5 : 3);
        double angle = (uniform01(rng) * 2 - 1) * std::numbers::pi;
        if (kind == 0) {
            c.append(Gate::x90(q));
        } else if (kind == 1) {
            c.append(Gate::y90(q));
        } else if (kind == 2) {
            c.append(Gate::rz(q, angle));
        } else {
            auto r = static_cast<uint32_t>((q + 1 + uniform_index(rng, width - 1)) % width);
            c.append(kind == 3 ? Gate::zz(q, r, angle / 2) : Gate::xx(q, r, angle / 2));
        }
    }
    return c;
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

}  // namespace

std::vector<CheckResult> self_check(uint64_t seed) {
    std::vector<CheckResult> out;
    Rng rng = make_rng(seed, "self-check");

    {
        double worst = 0;
        for (size_t n = 0; n <= SUBSET_ORACLE_MAX; n++) {
            std::vector<double> f(n);
            for (auto &x : f) {
                x = uniform01(rng);
            }
            for (size_t m = 0; m <= n; m++) {
                worst = std::max(worst, std::abs(poisson_binomial_pmf(f, m) - subset_enumeration_pmf(f, m)));
            }
        }
        out.push_back({"poisson_binomial_vs_subsets", worst <= 1e-12, "max diff " + fmt(worst)});
    }
    {
        double worst = 0;
        for (int trial = 0; trial < 20; trial++) {
            size_t width = 1 + uniform_index(rng, 3);
            Circuit c = random_native_circuit(rng, width, 8);
            NoiseModel noise = NoiseModel::uniform(0.3 * uniform01(rng), 0.3 * uniform01(rng), 0.05 * uniform01(rng));
            worst = std::max(worst, total_variation(exact_channel(c, noise), density_channel_distribution(c, noise)));
        }
        out.push_back({"exact_channel_vs_density_oracle", worst <= 1e-12, "max TV " + fmt(worst)});
    }
    {
        CliffordTables t = clifford_tables();
        bool closed = t.one_qubit.size() == 24;
        for (size_t i = 0; i < t.one_qubit_unitaries.size() && closed; i++) {
            for (size_t j = 0; j < t.one_qubit_unitaries.size() && closed; j++) {
                closed = find_clifford(t, t.one_qubit_unitaries[i] * t.one_qubit_unitaries[j]) >= 0;
            }
        }
        out.push_back({"one_qubit_clifford_closure", closed, std::to_string(t.one_qubit.size()) + " elements"});
    }
    {
        double worst = 0;
        DrbDesign design = DrbDesign::two_qubit_default(0.5);
        for (uint64_t k = 0; k < 200; k++) {
            DrbCircuit dc = sample_drb_circuit(design, uniform_index(rng, 30), derive_seed(seed, "self-check-drb", k));
            worst = std::max(worst, inversion_error(dc.circuit));
        }
        out.push_back({"drb_inversion_unitary", worst <= 1e-10, "max distance " + fmt(worst)});
    }
    {
        double worst = 0;
        for (int trial = 0; trial < 20; trial++) {
            Circuit c(3);
            c.append(Gate::h(0)).append(Gate::cnot(0, 1)).append(Gate::cphase(1, 2, uniform01(rng) * 6));
            c.append(Gate::swap(0, 2)).append(Gate::cz(2, 1)).append(Gate::xx(0, 1, uniform01(rng)));
            worst = std::max(worst, distance_up_to_phase(unitary(decompose_to_native(c)), unitary(c)));
        }
        out.push_back({"decomposition_unitary", worst <= 1e-10, "max distance " + fmt(worst)});
    }
    {
        double worst = 0;
        for (size_t w = 1; w <= 6; w++) {
            ApplicationInstance inst = gen_qft(w, uniform_index(rng, uint64_t{1} << w), w % 2 == 0);
            worst = std::max(worst, total_variation(inst.ideal, ideal_distribution(inst.reference)));
            ApplicationInstance qpe = gen_phase_estimation(w + 1, uniform01(rng));
            worst = std::max(worst, total_variation(qpe.ideal, ideal_distribution(qpe.reference)));
        }
        out.push_back({"appsuite_ideal_vs_simulation", worst <= 1e-9, "max TV " + fmt(worst)});
    }
    {
        FitResult fit = fit_decay({1, 10, 100, 1000}, {0.5 + 0.5 * 0.99, 0.5 + 0.5 * std::pow(0.99, 10),
                                                       0.5 + 0.5 * std::pow(0.99, 100), 0.5 + 0.5 * std::pow(0.99, 1000)});
        double err = std::max({std::abs(fit.a - 0.5), std::abs(fit.b - 0.5), std::abs(fit.p - 0.99)});
        out.push_back({"fit_decay_model_data", err <= 1e-6, "max parameter error " + fmt(err)});
    }
    return out;
}

std::string self_check_report(const std::vector<CheckResult> &checks) {
    nlohmann::json doc;
    bool all = true;
    doc["checks"] = nlohmann::json::array();
    for (const auto &c : checks) {
        all = all && c.passed;
        doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    doc["passed"] = all;
    return doc.dump(2) + "\n";
}

}  // namespace ionbench::oracles
