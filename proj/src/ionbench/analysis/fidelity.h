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

#ifndef IONBENCH_ANALYSIS_FIDELITY_H
#define IONBENCH_ANALYSIS_FIDELITY_H

#include "ionbench/simulator/histogram.h"

namespace ionbench {

/// (sum_b sqrt(p_b q_b))^2, with no normalization to the uniform distribution.
/// Throws std::invalid_argument if widths differ or either total is more than
/// 1e-6 away from 1.
double hellinger_fidelity(const Distribution &p, const Distribution &q);

}  // namespace ionbench

#endif
