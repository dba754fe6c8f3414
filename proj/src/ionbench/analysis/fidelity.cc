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

#include "ionbench/analysis/fidelity.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ionbench {

double hellinger_fidelity(const Distribution &p, const Distribution &q) {
    if (p.width != q.width) {
        throw std::invalid_argument("hellinger_fidelity: distributions differ in width");
    }
    if (std::abs(p.total() - 1) > 1e-6 || std::abs(q.total() - 1) > 1e-6) {
        throw std::invalid_argument("hellinger_fidelity: distributions must be normalized");
    }
    // Iterate the smaller map, look up in the larger.
    const Distribution &small = p.probs.size() <= q.probs.size() ? p : q;
    const Distribution &large = &small == &p ? q : p;
    double overlap = 0;
    for (const auto &[b, x] : small.probs) {
        auto it = large.probs.find(b);
        if (it != large.probs.end()) {
            overlap += std::sqrt(x * it->second);
        }
    }
    return std::clamp(overlap * overlap, 0.0, 1.0);
}

}  // namespace ionbench
