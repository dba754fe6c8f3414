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

#ifndef IONBENCH_ANALYSIS_REGRESSION_H
#define IONBENCH_ANALYSIS_REGRESSION_H

#include <span>

namespace ionbench {

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double slope_stderr = 0;
    /// slope -/+ 2 standard errors.
    double slope_lo = 0;
    double slope_hi = 0;

    /// The 2-sigma slope interval contains zero.
    bool no_correlation() const { return slope_lo <= 0 && slope_hi >= 0; }
};

/// Ordinary least squares y = slope x + intercept. Throws
/// std::invalid_argument with fewer than 3 points, mismatched lengths, or
/// constant x.
LinearFit linear_regression_with_ci(std::span<const double> x, std::span<const double> y);

}  // namespace ionbench

#endif
