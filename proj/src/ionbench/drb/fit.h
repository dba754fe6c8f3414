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

#ifndef IONBENCH_DRB_FIT_H
#define IONBENCH_DRB_FIT_H

#include <cstdint>
#include <optional>
#include <vector>

#include "ionbench/drb/drb.h"

namespace ionbench {

/// Fixed asymptote used for two-qubit decays.
constexpr double TWO_QUBIT_ASYMPTOTE = 0.25;

struct FitResult {
    double a = 0;
    double b = 0;
    double p = 1;
    bool a_fixed = false;
    /// Set when all success values are equal and p is unidentifiable (p = 1).
    bool degenerate = false;
    /// Sum of squared residuals at the optimum.
    double residual = 0;
    /// decay_to_error_rate(p, n_qubits); filled by fit_dataset.
    double error_rate = 0;

    double predict(double depth) const;
};

/// Least-squares fit of a + b p^depth to `mean_success`.
///
/// Scans 10^4 values of p with 1 - p log-spaced over [1e-7, 1], solving the
/// linear problem in (a, b) (or b alone if `a_fixed`) at each, with a kept in
/// [0, 1]; then refines p by golden-section search to |dp| < 1e-9.
/// Throws std::invalid_argument with fewer than 3 distinct depths (2 when
/// `a_fixed`), mismatched lengths, or success values outside [0, 1].
FitResult fit_decay(const std::vector<double> &depths, const std::vector<double> &mean_success,
                    std::optional<double> a_fixed = std::nullopt);

/// r = (1 - p) (4^n - 1) / 4^n.
double decay_to_error_rate(double p, size_t n_qubits);

/// Fits a pooled dataset: free asymptote for one qubit, fixed 0.25 for two.
FitResult fit_dataset(const DrbDataset &dataset);

struct RateExtraction {
    /// Error of a layer of two simultaneous one-qubit gates.
    double pair_error = 0;
    double r_2q = 0;
    double r_1q = 0;
    /// Some component fell outside [0, 1]; values are kept unclipped.
    bool out_of_range = false;
};

/// Inverts e(p_2q) = (1 - p_2q) e_pair + p_2q r_2q at p_2q = 0.25 and 0.75,
/// with e_pair = 1 - (1 - r_1q)^2.
RateExtraction extract_rates(double e_low, double e_high);

struct BootstrapResult {
    std::vector<double> samples;
    double mean = 0;
    double std = 0;
};

constexpr size_t DEFAULT_BOOTSTRAP_RESAMPLES = 200;

/// Parametric bootstrap of the error rate: every record's success count is
/// redrawn from Binomial(shots, fit.predict(depth)) and the dataset refit.
/// Resample r uses stream (seed, "bootstrap", r).
BootstrapResult bootstrap_fit(const DrbDataset &dataset, const FitResult &fit, size_t n_resamples, uint64_t seed);

/// Bootstrap of r_2q from the two 2Q experiments; both datasets are redrawn
/// with the same resample index before extraction.
BootstrapResult bootstrap_two_qubit_rate(const DrbDataset &low, const FitResult &low_fit, const DrbDataset &high,
                                         const FitResult &high_fit, size_t n_resamples, uint64_t seed);

/// |p_full - p_trunc| / (1 - p_full), where the truncated fit uses depths <= max_depth.
double truncation_comparison(const DrbDataset &deep, size_t max_depth = 112);

/// Dataset with every record's successes redrawn from the fitted curve.
DrbDataset resample_dataset(const DrbDataset &dataset, const FitResult &fit, uint64_t seed);

}  // namespace ionbench

#endif
