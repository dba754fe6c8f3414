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

#ifndef IONBENCH_ANALYSIS_RECORDS_H
#define IONBENCH_ANALYSIS_RECORDS_H

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace ionbench {

/// One benchmarked application instance.
struct BenchmarkRecord {
    std::string family;
    /// Reference (pre-compilation) width and two-qubit gate count.
    size_t w_c = 0;
    size_t d_c = 0;
    size_t compiled_2q = 0;
    double f_simple = 0;
    double f_voted = 0;
    std::optional<double> f_predicted;

    bool operator==(const BenchmarkRecord &) const = default;
};

enum class FidelityKind { Simple, Voted, Predicted };

/// Fidelity of the requested kind; NaN if a predicted value is absent.
double record_fidelity(const BenchmarkRecord &record, FidelityKind kind);

/// CSV with header family,w_c,d_c,compiled_2q,f_simple,f_voted,f_predicted.
/// f_predicted is left empty when absent.
std::string records_to_csv(const std::vector<BenchmarkRecord> &records);

/// Throws ParseError whose line() is the 1-based row number (header = row 1).
std::vector<BenchmarkRecord> records_from_csv(const std::string &text);

}  // namespace ionbench

#endif
