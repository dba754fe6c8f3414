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

#ifndef IONBENCH_SIMULATOR_DENSITY_H
#define IONBENCH_SIMULATOR_DENSITY_H

#include "ionbench/circuit/circuit.h"
#include "ionbench/simulator/histogram.h"
#include "ionbench/simulator/noise_model.h"

namespace ionbench {

constexpr size_t EXACT_CHANNEL_MAX_QUBITS = 6;

/// Outcome distribution of a native circuit under the depolarizing model,
/// evolved exactly as a density operator (every Pauli branch summed), with
/// readout flips applied to the diagonal. Throws SizeError above
/// EXACT_CHANNEL_MAX_QUBITS and std::invalid_argument on non-native gates.
Distribution exact_channel(const Circuit &circuit, const NoiseModel &noise);

}  // namespace ionbench

#endif
