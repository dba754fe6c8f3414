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

#ifndef IONBENCH_COMPILER_DECOMPOSE_H
#define IONBENCH_COMPILER_DECOMPOSE_H

#include <vector>

#include "ionbench/circuit/circuit.h"

namespace ionbench {

/// Rewrites `circuit` over {X90, Y90, RZ, ZZ}.
///
/// Every composite two-qubit gate becomes exactly one ZZ plus one-qubit gates
/// (SWAP becomes three). XX is rewritten through wrap_xx_as_zz. Adjacent RZ
/// gates on a qubit are merged and zero-angle rotations/entanglers dropped;
/// barriers stop merging and are removed from the output.
/// The result equals the input up to global phase.
Circuit decompose_to_native(const Circuit &circuit);

/// XX(c) as [RY(-pi/2) on both] ZZ(c) [RY(pi/2) on both], with RY(-pi/2)
/// written as RZ(pi) Y90 RZ(pi). Four physical pi/2 pulses and one ZZ.
/// Throws std::invalid_argument if `xx` is not an XX gate.
std::vector<Gate> wrap_xx_as_zz(const Gate &xx);

/// ZZ(c) realised from the MS interaction: [RY(pi/2) on both] XX(c) [RY(-pi/2) on both].
/// Throws std::invalid_argument if `zz` is not a ZZ gate.
std::vector<Gate> wrap_zz_as_xx(const Gate &zz);

/// Merges runs of RZ on the same qubit and drops identity rotations/entanglers.
/// Barriers end every run; they are kept in the output iff `keep_barriers`.
Circuit merge_rotations(const Circuit &circuit, bool keep_barriers);

}  // namespace ionbench

#endif
