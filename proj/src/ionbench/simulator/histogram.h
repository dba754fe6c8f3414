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

#ifndef IONBENCH_SIMULATOR_HISTOGRAM_H
#define IONBENCH_SIMULATOR_HISTOGRAM_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ionbench/util/bits.h"

namespace ionbench {

/// Outcome counts. Keys are basis states (bit q = qubit q).
struct Histogram {
    size_t width = 0;
    std::map<Bits, uint64_t> counts;

    uint64_t shots() const;
    void add(Bits outcome, uint64_t n = 1) { counts[outcome] += n; }
    bool operator==(const Histogram &) const = default;
};

/// Outcome probabilities. Zero entries are not stored.
struct Distribution {
    size_t width = 0;
    std::map<Bits, double> probs;

    double total() const;
    double prob(Bits outcome) const;
    bool operator==(const Distribution &) const = default;
};

/// Counts divided by shots. Throws std::invalid_argument on an empty histogram.
Distribution normalize(const Histogram &histogram);

/// Rescales to unit total. Throws std::invalid_argument if the total is not positive.
Distribution renormalized(const Distribution &distribution);

/// Relabels a physical-qubit histogram onto logical qubits: logical bit q is
/// physical bit `logical_to_physical[q]`. Other physical bits are dropped.
Histogram to_logical(const Histogram &physical, const std::vector<uint32_t> &logical_to_physical);

/// Sum over outcomes of |p - q| / 2.
double total_variation(const Distribution &p, const Distribution &q);

/// {"width": n, "shots": s, "counts": {"0101": 12, ...}}
std::string histogram_to_json(const Histogram &histogram);
Histogram histogram_from_json(const std::string &text);

/// {"width": n, "probs": {"0101": 0.25, ...}}
std::string distribution_to_json(const Distribution &distribution);
Distribution distribution_from_json(const std::string &text);

}  // namespace ionbench

#endif
