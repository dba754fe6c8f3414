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

#include "ionbench/analysis/regression.h"

#include <cmath>
#include <stdexcept>

namespace ionbench {

LinearFit linear_regression_with_ci(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("linear_regression_with_ci: x and y differ in length");
    }
    if (x.size() < 3) {
        throw std::invalid_argument("linear_regression_with_ci: need at least 3 points");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0;
    double my = 0;
    for (size_t k = 0; k < x.size(); k++) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0;
    double sxy = 0;
    for (size_t k = 0; k < x.size(); k++) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    if (sxx <= 0) {
        throw std::invalid_argument("linear_regression_with_ci: x values are all equal");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (size_t k = 0; k < x.size(); k++) {
        double r = y[k] - fit.intercept - fit.slope * x[k];
        ss_res += r * r;
    }
    fit.slope_stderr = std::sqrt(ss_res / (n - 2) / sxx);
    fit.slope_lo = fit.slope - 2 * fit.slope_stderr;
    fit.slope_hi = fit.slope + 2 * fit.slope_stderr;
    return fit;
}

}  // namespace ionbench
