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

// Parallel kernels against their serial references, and batched trajectories.

#include <benchmark/benchmark.h>

#include "ionbench/simulator/kernels.h"
#include "ionbench/simulator/noise_model.h"
#include "ionbench/simulator/trajectory.h"
#include "ionbench/util/rng.h"

using namespace ionbench;

namespace {

StateVector spread_state(size_t n) {
    StateVector s = zero_state(n);
    for (uint32_t q = 0; q < n; q++) {
        kernels::serial::apply_gate(s, Gate::y90(q));
    }
    return s;
}

template <auto Kernel>
void gate_kernel(benchmark::State &st) {
    const auto n = static_cast<size_t>(st.range(0));
    StateVector s = spread_state(n);
    const uint32_t hi = static_cast<uint32_t>(n - 1);
    for (auto _ : st) {
        Kernel(s, Gate::x90(0));
        Kernel(s, Gate::x90(hi));
        Kernel(s, Gate::xx(0, hi, 0.3));
        Kernel(s, Gate::zz(1, hi, 0.4));
        benchmark::ClobberMemory();
    }
    st.SetItemsProcessed(static_cast<int64_t>(st.iterations()) * 4 * static_cast<int64_t>(s.size()));
}

template <auto Norm>
void norm_kernel(benchmark::State &st) {
    StateVector s = spread_state(static_cast<size_t>(st.range(0)));
    for (auto _ : st) {
        benchmark::DoNotOptimize(Norm(s));
    }
    st.SetItemsProcessed(static_cast<int64_t>(st.iterations()) * static_cast<int64_t>(s.size()));
}

void apply_parallel(std::span<Complex> s, const Gate &g) { kernels::apply_gate(s, g); }
void apply_serial(std::span<Complex> s, const Gate &g) { kernels::serial::apply_gate(s, g); }
double norm_parallel(std::span<const Complex> s) { return kernels::norm_squared(s); }
double norm_serial(std::span<const Complex> s) { return kernels::serial::norm_squared(s); }

void trajectory_batch(benchmark::State &st) {
    const auto n = static_cast<size_t>(st.range(0));
    Rng rng = make_rng(3, "bench-circuit");
    Circuit c(n);
    for (int k = 0; k < 40; k++) {
        auto a = static_cast<uint32_t>(uniform_index(rng, n));
        auto b = static_cast<uint32_t>((a + 1 + uniform_index(rng, n - 1)) % n);
        c.append(Gate::x90(a));
        c.append(Gate::zz(a, b, uniform01(rng)));
    }
    const NoiseModel noise = NoiseModel::median();
    uint64_t seed = 0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(run_shots(c, noise, 32, seed++));
    }
    st.SetItemsProcessed(static_cast<int64_t>(st.iterations()) * 32);
}

}  // namespace

BENCHMARK(gate_kernel<apply_parallel>)->Name("gates/parallel")->DenseRange(12, 22, 2);
BENCHMARK(gate_kernel<apply_serial>)->Name("gates/serial")->DenseRange(12, 22, 2);
BENCHMARK(norm_kernel<norm_parallel>)->Name("norm/parallel")->DenseRange(12, 22, 2);
BENCHMARK(norm_kernel<norm_serial>)->Name("norm/serial")->DenseRange(12, 22, 2);
BENCHMARK(trajectory_batch)->Name("trajectory/32-shots")->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
