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

#ifndef IONBENCH_SIMULATOR_KERNELS_H
#define IONBENCH_SIMULATOR_KERNELS_H

#include <span>
#include <vector>

#include "ionbench/circuit/gate.h"

namespace ionbench {

using StateVector = std::vector<Complex>;

/// State-vector gate kernels. Amplitude index bit q is qubit q.
///
/// The kernels in `kernels` split their loop over OpenMP threads when the
/// vector is large and no enclosing parallel region is active; `kernels::serial`
/// holds the plain single-loop versions they are tested and benchmarked against.
namespace kernels {

/// Vectors shorter than this never spawn threads.
constexpr size_t PARALLEL_MIN_SIZE = size_t{1} << 14;

void apply_mat2(std::span<Complex> state, uint32_t q, const Mat2 &m);
void apply_diag(std::span<Complex> state, uint32_t q, Complex d0, Complex d1);
/// exp(-i angle Z_a Z_b).
void apply_zz(std::span<Complex> state, uint32_t a, uint32_t b, double angle);
/// exp(-i angle X_a X_b).
void apply_xx(std::span<Complex> state, uint32_t a, uint32_t b, double angle);
/// General two-qubit unitary with local index 2*bit(a) + bit(b).
void apply_mat4(std::span<Complex> state, uint32_t a, uint32_t b, const Mat4 &m);
/// Applies any gate of the IR.
void apply_gate(std::span<Complex> state, const Gate &gate);
double norm_squared(std::span<const Complex> state);

namespace serial {
void apply_mat2(std::span<Complex> state, uint32_t q, const Mat2 &m);
void apply_diag(std::span<Complex> state, uint32_t q, Complex d0, Complex d1);
void apply_zz(std::span<Complex> state, uint32_t a, uint32_t b, double angle);
void apply_xx(std::span<Complex> state, uint32_t a, uint32_t b, double angle);
void apply_mat4(std::span<Complex> state, uint32_t a, uint32_t b, const Mat4 &m);
void apply_gate(std::span<Complex> state, const Gate &gate);
double norm_squared(std::span<const Complex> state);
}  // namespace serial

}  // namespace kernels

/// |0...0> on `num_qubits` qubits.
StateVector zero_state(size_t num_qubits);

}  // namespace ionbench

#endif
