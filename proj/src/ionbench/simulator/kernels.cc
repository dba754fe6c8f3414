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

#include "ionbench/simulator/kernels.h"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ionbench {

namespace {

bool go_parallel(size_t size) {
#ifdef _OPENMP
    return size >= kernels::PARALLEL_MIN_SIZE && !omp_in_parallel() && omp_get_max_threads() > 1;
#else
    (void)size;
    return false;
#endif
}

/// Runs body(k) for k in [0, n), threaded only when `go_parallel(size)`. Small
/// states skip the OpenMP runtime entirely.
template <typename Body>
inline void for_range(ptrdiff_t n, size_t size, const Body &body) {
    if (go_parallel(size)) {
#pragma omp parallel for schedule(static)
        for (ptrdiff_t k = 0; k < n; k++) {
            body(k);
        }
    } else {
        for (ptrdiff_t k = 0; k < n; k++) {
            body(k);
        }
    }
}

/// Plain complex product; operator* routes through a NaN-recovering library call.
inline Complex mul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

/// Index with a zero bit inserted at position q.
inline size_t insert_zero(size_t k, uint32_t q) {
    size_t low = k & ((size_t{1} << q) - 1);
    return ((k >> q) << (q + 1)) | low;
}

/// Index with zero bits inserted at positions lo < hi.
inline size_t insert_two_zeros(size_t k, uint32_t lo, uint32_t hi) {
    return insert_zero(insert_zero(k, lo), hi);
}

}  // namespace

StateVector zero_state(size_t num_qubits) {
    StateVector s(size_t{1} << num_qubits, Complex(0));
    s[0] = 1;
    return s;
}

namespace kernels {

void apply_mat2(std::span<Complex> state, uint32_t q, const Mat2 &m) {
    const size_t half = state.size() / 2;
    const size_t bit = size_t{1} << q;
    const auto n = static_cast<ptrdiff_t>(half);
    for_range(n, state.size(), [&](ptrdiff_t k) {
        size_t i0 = insert_zero(static_cast<size_t>(k), q);
        size_t i1 = i0 | bit;
        Complex a = state[i0];
        Complex b = state[i1];
        state[i0] = mul(m[0], a) + mul(m[1], b);
        state[i1] = mul(m[2], a) + mul(m[3], b);
    });
}

void apply_diag(std::span<Complex> state, uint32_t q, Complex d0, Complex d1) {
    const auto n = static_cast<ptrdiff_t>(state.size());
    for_range(n, state.size(), [&](ptrdiff_t i) {
        state[i] = mul(state[i], ((static_cast<size_t>(i) >> q) & 1) ? d1 : d0);
    });
}

void apply_zz(std::span<Complex> state, uint32_t a, uint32_t b, double angle) {
    const Complex even = std::polar(1.0, -angle);
    const Complex odd = std::polar(1.0, angle);
    const auto n = static_cast<ptrdiff_t>(state.size());
    for_range(n, state.size(), [&](ptrdiff_t i) {
        size_t parity = ((static_cast<size_t>(i) >> a) ^ (static_cast<size_t>(i) >> b)) & 1;
        state[i] = mul(state[i], parity ? odd : even);
    });
}

void apply_xx(std::span<Complex> state, uint32_t a, uint32_t b, double angle) {
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    const size_t mask = (size_t{1} << a) | (size_t{1} << b);
    const uint32_t lo = std::min(a, b);
    const uint32_t hi = std::max(a, b);
    const auto quarter = static_cast<ptrdiff_t>(state.size() / 4);
    const size_t bit_a = size_t{1} << a;
    for_range(quarter, state.size(), [&](ptrdiff_t k) {
        size_t base = insert_two_zeros(static_cast<size_t>(k), lo, hi);
        // Pairs (00, 11) and (01, 10) are each mixed by XX.
        for (size_t first : {base, base | bit_a}) {
            size_t second = first ^ mask;
            Complex x = state[first];
            Complex y = state[second];
            // -i sin(angle) times an amplitude.
            state[first] = {c * x.real() + sn * y.imag(), c * x.imag() - sn * y.real()};
            state[second] = {c * y.real() + sn * x.imag(), c * y.imag() - sn * x.real()};
        }
    });
}

void apply_mat4(std::span<Complex> state, uint32_t a, uint32_t b, const Mat4 &m) {
    double mr[16];
    double mi[16];
    for (size_t i = 0; i < 16; i++) {
        mr[i] = m[i].real();
        mi[i] = m[i].imag();
    }
    const size_t ba = size_t{1} << a;
    const size_t bb = size_t{1} << b;
    const uint32_t lo = std::min(a, b);
    const uint32_t hi = std::max(a, b);
    const auto quarter = static_cast<ptrdiff_t>(state.size() / 4);
    for_range(quarter, state.size(), [&](ptrdiff_t k) {
        size_t base = insert_two_zeros(static_cast<size_t>(k), lo, hi);
        const size_t idx[4] = {base, base | bb, base | ba, base | ba | bb};
        double vr[4];
        double vi[4];
        for (size_t c = 0; c < 4; c++) {
            vr[c] = state[idx[c]].real();
            vi[c] = state[idx[c]].imag();
        }
        for (size_t r = 0; r < 4; r++) {
            double sr = 0;
            double si = 0;
            for (size_t c = 0; c < 4; c++) {
                sr += mr[r * 4 + c] * vr[c] - mi[r * 4 + c] * vi[c];
                si += mr[r * 4 + c] * vi[c] + mi[r * 4 + c] * vr[c];
            }
            state[idx[r]] = {sr, si};
        }
    });
}

void apply_gate(std::span<Complex> state, const Gate &gate) {
    switch (gate.kind) {
        case GateKind::RZ:
            apply_diag(state, gate.qubits[0], std::polar(1.0, -gate.angle / 2), std::polar(1.0, gate.angle / 2));
            return;
        case GateKind::ZZ:
            apply_zz(state, gate.qubits[0], gate.qubits[1], gate.angle);
            return;
        case GateKind::XX:
            apply_xx(state, gate.qubits[0], gate.qubits[1], gate.angle);
            return;
        default:
            break;
    }
    if (gate.arity() == 1) {
        apply_mat2(state, gate.qubits[0], gate_matrix_1q(gate));
    } else {
        apply_mat4(state, gate.qubits[0], gate.qubits[1], gate_matrix_2q(gate));
    }
}

double norm_squared(std::span<const Complex> state) {
    if (!go_parallel(state.size())) {
        return serial::norm_squared(state);
    }
    double total = 0;
    const auto n = static_cast<ptrdiff_t>(state.size());
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (ptrdiff_t i = 0; i < n; i++) {
        total += std::norm(state[i]);
    }
    return total;
}

namespace serial {

void apply_mat2(std::span<Complex> state, uint32_t q, const Mat2 &m) {
    const size_t bit = size_t{1} << q;
    for (size_t i0 = 0; i0 < state.size(); i0++) {
        if (i0 & bit) {
            continue;
        }
        size_t i1 = i0 | bit;
        Complex a = state[i0];
        Complex b = state[i1];
        state[i0] = m[0] * a + m[1] * b;
        state[i1] = m[2] * a + m[3] * b;
    }
}

void apply_diag(std::span<Complex> state, uint32_t q, Complex d0, Complex d1) {
    for (size_t i = 0; i < state.size(); i++) {
        state[i] *= ((i >> q) & 1) ? d1 : d0;
    }
}

void apply_zz(std::span<Complex> state, uint32_t a, uint32_t b, double angle) {
    const Complex even = std::polar(1.0, -angle);
    const Complex odd = std::polar(1.0, angle);
    for (size_t i = 0; i < state.size(); i++) {
        state[i] *= (((i >> a) ^ (i >> b)) & 1) ? odd : even;
    }
}

void apply_xx(std::span<Complex> state, uint32_t a, uint32_t b, double angle) {
    const double c = std::cos(angle);
    const Complex s(0, -std::sin(angle));
    const size_t mask = (size_t{1} << a) | (size_t{1} << b);
    for (size_t i = 0; i < state.size(); i++) {
        size_t j = i ^ mask;
        if (j < i) {
            continue;
        }
        Complex x = state[i];
        Complex y = state[j];
        state[i] = c * x + s * y;
        state[j] = s * x + c * y;
    }
}

void apply_mat4(std::span<Complex> state, uint32_t a, uint32_t b, const Mat4 &m) {
    const size_t ba = size_t{1} << a;
    const size_t bb = size_t{1} << b;
    for (size_t base = 0; base < state.size(); base++) {
        if (base & (ba | bb)) {
            continue;
        }
        const size_t idx[4] = {base, base | bb, base | ba, base | ba | bb};
        Complex v[4] = {state[idx[0]], state[idx[1]], state[idx[2]], state[idx[3]]};
        for (size_t r = 0; r < 4; r++) {
            Complex acc = 0;
            for (size_t c = 0; c < 4; c++) {
                acc += m[r * 4 + c] * v[c];
            }
            state[idx[r]] = acc;
        }
    }
}

void apply_gate(std::span<Complex> state, const Gate &gate) {
    if (gate.arity() == 1) {
        apply_mat2(state, gate.qubits[0], gate_matrix_1q(gate));
    } else {
        apply_mat4(state, gate.qubits[0], gate.qubits[1], gate_matrix_2q(gate));
    }
}

double norm_squared(std::span<const Complex> state) {
    double total = 0;
    for (const auto &a : state) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace serial

}  // namespace kernels

}  // namespace ionbench
