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

#include "ionbench/appsuite/appsuite.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ionbench/circuit/circuit_json.h"
#include "ionbench/simulator/trajectory.h"

namespace ionbench {

namespace {

constexpr double PI = std::numbers::pi;

/// Swap-free QFT: qubit 0 ends with phase 2 pi 0.x_0 x_1 ... (bit k = qubit k,
/// qubit 0 most significant).
void append_qft(Circuit &c, uint32_t first, size_t n) {
    for (uint32_t k = 0; k < n; k++) {
        c.append(Gate::h(first + k));
        for (uint32_t j = k + 1; j < n; j++) {
            c.append(Gate::cphase(first + j, first + k, PI / std::ldexp(1.0, static_cast<int>(j - k))));
        }
    }
}

void append_inverse_qft(Circuit &c, uint32_t first, size_t n) {
    for (size_t kk = n; kk-- > 0;) {
        auto k = static_cast<uint32_t>(kk);
        for (size_t jj = n; jj-- > k + 1;) {
            auto j = static_cast<uint32_t>(jj);
            c.append(Gate::cphase(first + j, first + k, -PI / std::ldexp(1.0, static_cast<int>(j - k))));
        }
        c.append(Gate::h(first + k));
    }
}

/// Integer whose most significant of `n` bits is qubit 0.
uint64_t msb_first_value(Bits bits, size_t n) {
    uint64_t v = 0;
    for (size_t q = 0; q < n; q++) {
        v = (v << 1) | ((bits >> q) & 1);
    }
    return v;
}

Bits bits_from_msb_first(uint64_t value, size_t n) {
    Bits b = 0;
    for (size_t q = 0; q < n; q++) {
        b |= ((value >> (n - 1 - q)) & 1) << q;
    }
    return b;
}

}  // namespace

std::string_view family_name(AppFamily family) {
    switch (family) {
        case AppFamily::QFT:
            return "qft";
        case AppFamily::PhaseEstimation:
            return "qpe";
        case AppFamily::HamiltonianSimulation:
            return "hamsim";
        case AppFamily::Ingested:
            return "ingested";
    }
    return "?";
}

void append_rx(Circuit &circuit, uint32_t q, double theta) {
    // RX(t) = RZ(-pi/2) X90 RZ(pi - t) X90 RZ(3 pi/2) as a matrix product,
    // i.e. the reverse order in time.
    circuit.append(Gate::rz(q, 3 * PI / 2));
    circuit.append(Gate::x90(q));
    circuit.append(Gate::rz(q, PI - theta));
    circuit.append(Gate::x90(q));
    circuit.append(Gate::rz(q, -PI / 2));
}

ApplicationInstance gen_qft(size_t width, uint64_t input, bool round_trip) {
    if (width < 1 || width > QFT_MAX_WIDTH) {
        throw std::invalid_argument("gen_qft: width must be in [1, 24], got " + std::to_string(width));
    }
    if (input >> width) {
        throw std::invalid_argument("gen_qft: input state does not fit in width");
    }
    Circuit c(width);
    Distribution ideal{width, {}};
    const uint64_t x = msb_first_value(input, width);
    if (round_trip) {
        // The swap-free QFT of |x> is a product state with qubit k carrying
        // relative phase 2 pi (x mod 2^(n-k)) / 2^(n-k).
        for (uint32_t k = 0; k < width; k++) {
            uint64_t modulus = uint64_t{1} << (width - k);
            double phase = 2 * PI * static_cast<double>(x % modulus) / static_cast<double>(modulus);
            c.append(Gate::h(k));
            c.append(Gate::rz(k, phase));
        }
        c.barrier();
        append_inverse_qft(c, 0, width);
        ideal.probs[input] = 1.0;
    } else {
        for (uint32_t q = 0; q < width; q++) {
            if ((input >> q) & 1) {
                c.append(Gate::make(GateKind::X90, {q}));
                c.append(Gate::make(GateKind::X90, {q}));
            }
        }
        c.barrier();
        append_qft(c, 0, width);
        double p = std::ldexp(1.0, -static_cast<int>(width));
        for (Bits b = 0; b < (Bits{1} << width); b++) {
            ideal.probs[b] = p;
        }
    }
    return {AppFamily::QFT,
            "qft-w" + std::to_string(width) + "-in" + std::to_string(input) + (round_trip ? "" : "-fwd"),
            std::move(c),
            std::move(ideal),
            {{"input", static_cast<double>(input)}, {"round_trip", round_trip ? 1.0 : 0.0}}};
}

Distribution qpe_counting_distribution(size_t m, double phase) {
    Distribution d{m, {}};
    const double size = std::ldexp(1.0, static_cast<int>(m));
    for (uint64_t k = 0; k < (uint64_t{1} << m); k++) {
        // |(1/M) sum_j e^{2 pi i j (phase - k/M)}|^2
        double delta = phase - static_cast<double>(k) / size;
        double num = std::sin(PI * size * delta);
        double den = std::sin(PI * delta);
        double p;
        if (std::abs(den) < 1e-12) {
            p = 1.0;
        } else {
            p = (num * num) / (size * size * den * den);
        }
        if (p >= 1e-15) {
            d.probs[bits_from_msb_first(k, m)] = p;
        }
    }
    return renormalized(d);
}

ApplicationInstance gen_phase_estimation(size_t width, double hidden_phase) {
    if (width < 2 || width > QFT_MAX_WIDTH) {
        throw std::invalid_argument("gen_phase_estimation: width must be in [2, 24], got " + std::to_string(width));
    }
    if (!(hidden_phase >= 0 && hidden_phase < 1)) {
        throw std::invalid_argument("gen_phase_estimation: phase must lie in [0, 1)");
    }
    const size_t m = width - 1;
    const auto eigen = static_cast<uint32_t>(m);
    Circuit c(width);
    c.append(Gate::x90(eigen));
    c.append(Gate::x90(eigen));
    for (uint32_t k = 0; k < m; k++) {
        c.append(Gate::h(k));
    }
    c.barrier();
    // Counting qubit k carries U^(2^k); the swap-free inverse QFT then reads
    // qubit 0 as the most significant bit.
    for (uint32_t k = 0; k < m; k++) {
        double power = std::ldexp(1.0, static_cast<int>(k));
        double angle = std::fmod(2 * PI * hidden_phase * power, 2 * PI);
        c.append(Gate::cphase(k, eigen, angle));
    }
    c.barrier();
    append_inverse_qft(c, 0, m);

    Distribution counting = qpe_counting_distribution(m, hidden_phase);
    Distribution ideal{width, {}};
    for (const auto &[b, p] : counting.probs) {
        ideal.probs[b | (Bits{1} << eigen)] = p;
    }
    return {AppFamily::PhaseEstimation,
            "qpe-w" + std::to_string(width) + "-phi" + format_double(hidden_phase),
            std::move(c),
            std::move(ideal),
            {{"phase", hidden_phase}}};
}

ApplicationInstance gen_hamiltonian_sim(size_t width, size_t steps, double coupling, double field, double dt) {
    if (width < 2 || width > DEFAULT_MAX_SIM_QUBITS) {
        throw std::invalid_argument("gen_hamiltonian_sim: width must be in [2, 26], got " + std::to_string(width));
    }
    Circuit c(width);
    for (size_t s = 0; s < steps; s++) {
        for (uint32_t k = 0; k + 1 < width; k++) {
            c.append(Gate::zz(k, k + 1, coupling * dt));
        }
        for (uint32_t k = 0; k < width; k++) {
            append_rx(c, k, 2 * field * dt);
        }
        c.barrier();
    }
    Distribution ideal = ideal_distribution(c);
    return {AppFamily::HamiltonianSimulation,
            "hamsim-w" + std::to_string(width) + "-s" + std::to_string(steps),
            std::move(c),
            std::move(ideal),
            {{"steps", static_cast<double>(steps)}, {"coupling", coupling}, {"field", field}, {"dt", dt}}};
}

ApplicationInstance ingest_instance(const std::string &circuit_json, const std::string &distribution_json,
                                    const std::string &name) {
    Circuit c = circuit_from_json(circuit_json);
    Distribution d = distribution_from_json(distribution_json);
    if (d.width != c.width()) {
        throw std::invalid_argument("ingest_instance: distribution width " + std::to_string(d.width) +
                                    " does not match circuit width " + std::to_string(c.width()));
    }
    double total = d.total();
    if (std::abs(total - 1) > 1e-6) {
        throw std::invalid_argument("ingest_instance: ideal distribution sums to " + format_double(total) +
                                    ", expected 1");
    }
    return {AppFamily::Ingested, name, std::move(c), renormalized(d), {}};
}

}  // namespace ionbench
