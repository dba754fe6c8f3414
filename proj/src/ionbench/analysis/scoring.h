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

#ifndef IONBENCH_ANALYSIS_SCORING_H
#define IONBENCH_ANALYSIS_SCORING_H

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ionbench/analysis/records.h"

namespace ionbench {

/// 1/e at full precision.
inline const double AQ_THRESHOLD = std::exp(-1.0);

struct AqResult {
    size_t score = 0;
    /// (family, width) cells with no record, for each family up to the score.
    std::vector<std::pair<std::string, size_t>> missing;
    std::string coverage_warning() const;
};

/// Largest n <= max w_c such that every record with w_c <= n and d_c <= n^2
/// has fidelity above `threshold` (voted fidelity if `use_voted`). 0 when no
/// n >= 1 qualifies or `records` is empty.
AqResult aq_score_detailed(const std::vector<BenchmarkRecord> &records, bool use_voted,
                           double threshold = AQ_THRESHOLD);
size_t aq_score(const std::vector<BenchmarkRecord> &records, bool use_voted, double threshold = AQ_THRESHOLD);

enum class Aggregate { Mean, Min };
enum class DepthAxis { Compiled, Reference };

struct VolumetricCell {
    size_t width_bin;
    size_t depth_bin;
    size_t count;
    double value;
};

/// Binned fidelities; bins are half-open [edges[i], edges[i+1]). Cells with
/// no record are absent.
struct VolumetricTable {
    std::vector<size_t> width_edges;
    std::vector<size_t> depth_edges;
    std::vector<VolumetricCell> cells;

    const VolumetricCell *find(size_t width_bin, size_t depth_bin) const;
    /// Rows width_lo,width_hi,depth_lo,depth_hi,count,value.
    std::string to_csv() const;
};

/// {0, 1, 2, 4, ...} up to the first power of two above `max_value`.
std::vector<size_t> power_of_two_edges(size_t max_value);

/// Throws std::invalid_argument if edges are not strictly increasing (at least
/// two each) or a record falls outside the bins.
VolumetricTable volumetric_table(const std::vector<BenchmarkRecord> &records, const std::vector<size_t> &width_edges,
                                 const std::vector<size_t> &depth_edges, Aggregate aggregate, FidelityKind fidelity,
                                 DepthAxis depth_axis = DepthAxis::Compiled);

/// Cell-wise a - b over cells present in both tables.
VolumetricTable volumetric_difference(const VolumetricTable &a, const VolumetricTable &b);

struct DecaySlope {
    /// Fitted -ln F per compiled two-qubit gate.
    double rate = 0;
    size_t used = 0;
    std::vector<std::string> warnings;
};

/// Least squares of -ln F against compiled_2q through the origin.
/// Records with F <= 0 are excluded with a warning. Throws
/// std::invalid_argument with fewer than 3 usable records.
DecaySlope decay_slope(const std::vector<BenchmarkRecord> &records, FidelityKind fidelity = FidelityKind::Simple);

}  // namespace ionbench

#endif
