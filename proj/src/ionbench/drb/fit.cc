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

#include "ionbench/drb/fit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "ionbench/util/rng.h"

namespace ionbench {

namespace {

constexpr size_t SCAN_POINTS = 10000;
constexpr double SCAN_MIN_GAP = 1e-7;
constexpr double GOLDEN_TOLERANCE = 1e-9;

struct Candidate {
    double a;
    double b;
    double sse;
};

class DecayProblem {
   public:
    DecayProblem(const std::vector<double> &depths, const std::vector<double> &y, std::optional<double> a_fixed)
        : depths_(depths), y_(y), a_fixed_(a_fixed) {}

    Candidate solve(double p) const {
        const size_t n = depths_.size();
        std::vector<double> u(n);
        for (size_t k = 0; k < n; k++) {
            u[k] = std::pow(p, depths_[k]);
        }
        if (a_fixed_) {
            return with_fixed_a(u, *a_fixed_);
        }
        double mu = 0;
        double my = 0;
        for (size_t k = 0; k < n; k++) {
            mu += u[k];
            my += y_[k];
        }
        mu /= static_cast<double>(n);
        my /= static_cast<double>(n);
        double suu = 0;
        double suy = 0;
        for (size_t k = 0; k < n; k++) {
            suu += (u[k] - mu) * (u[k] - mu);
            suy += (u[k] - mu) * (y_[k] - my);
        }
        double a;
        if (suu <= 1e-300) {
            a = 0;
        } else {
            double b = suy / suu;
            a = my - b * mu;
        }
        if (a < 0 || a > 1 || suu <= 1e-300) {
            return with_fixed_a(u, std::clamp(a, 0.0, 1.0));
        }
        return {a, suy / suu, sse(u, a, suy / suu)};
    }

   private:
    Candidate with_fixed_a(const std::vector<double> &u, double a) const {
        double num = 0;
        double den = 0;
        for (size_t k = 0; k < u.size(); k++) {
            num += u[k] * (y_[k] - a);
            den += u[k] * u[k];
        }
        double b = den > 0 ? num / den : 0;
        return {a, b, sse(u, a, b)};
    }

    double sse(const std::vector<double> &u, double a, double b) const {
        double s = 0;
        for (size_t k = 0; k < u.size(); k++) {
            double r = a + b * u[k] - y_[k];
            s += r * r;
        }
        return s;
    }

    const std::vector<double> &depths_;
    const std::vector<double> &y_;
    std::optional<double> a_fixed_;
};

}  // namespace

double FitResult::predict(double depth) const {
    return a + b * std::pow(p, depth);
}

FitResult fit_decay(const std::vector<double> &depths, const std::vector<double> &mean_success,
                    std::optional<double> a_fixed) {
    if (depths.size() != mean_success.size()) {
        throw std::invalid_argument("fit_decay: depths and success values differ in length");
    }
    std::set<double> distinct(depths.begin(), depths.end());
    size_t needed = a_fixed ? 2 : 3;
    if (distinct.size() < needed) {
        throw std::invalid_argument("fit_decay: need at least " + std::to_string(needed) + " distinct depths");
    }
    for (double s : mean_success) {
        if (!(s >= 0 && s <= 1)) {
            throw std::invalid_argument("fit_decay: success values must lie in [0, 1]");
        }
    }
    if (a_fixed && !(*a_fixed >= 0 && *a_fixed <= 1)) {
        throw std::invalid_argument("fit_decay: fixed asymptote must lie in [0, 1]");
    }

    FitResult result;
    result.a_fixed = a_fixed.has_value();
    auto [lo, hi] = std::minmax_element(mean_success.begin(), mean_success.end());
    if (*hi - *lo <= 1e-15) {
        result.degenerate = true;
        result.p = 1;
        result.a = a_fixed.value_or(0);
        result.b = *lo - result.a;
        result.residual = 0;
        return result;
    }

    DecayProblem problem(depths, mean_success, a_fixed);
    auto p_at = [](size_t i) {
        double exponent = std::log10(SCAN_MIN_GAP) * (1 - static_cast<double>(i) / (SCAN_POINTS - 1));
        return 1 - std::pow(10.0, exponent);
    };
    size_t best = 0;
    double best_sse = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < SCAN_POINTS; i++) {
        double s = problem.solve(p_at(i)).sse;
        if (s < best_sse) {
            best_sse = s;
            best = i;
        }
    }

    // p_at decreases with i.
    double left = p_at(std::min(best + 1, SCAN_POINTS - 1));
    double right = p_at(best == 0 ? 0 : best - 1);
    if (best == 0) {
        right = 1;
    }
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double c = right - inv_phi * (right - left);
    double d = left + inv_phi * (right - left);
    double fc = problem.solve(c).sse;
    double fd = problem.solve(d).sse;
    while (right - left > GOLDEN_TOLERANCE) {
        if (fc < fd) {
            right = d;
            d = c;
            fd = fc;
            c = right - inv_phi * (right - left);
            fc = problem.solve(c).sse;
        } else {
            left = c;
            c = d;
            fc = fd;
            d = left + inv_phi * (right - left);
            fd = problem.solve(d).sse;
        }
    }
    double p = (left + right) / 2;
    Candidate cand = problem.solve(p);
    double scan_p = p_at(best);
    Candidate scan = problem.solve(scan_p);
    if (scan.sse < cand.sse) {
        p = scan_p;
        cand = scan;
    }
    result.p = std::clamp(p, 0.0, 1.0);
    result.a = cand.a;
    result.b = cand.b;
    result.residual = cand.sse;
    return result;
}

double decay_to_error_rate(double p, size_t n_qubits) {
    double dim2 = std::pow(4.0, static_cast<double>(n_qubits));
    return (1 - p) * (dim2 - 1) / dim2;
}

FitResult fit_dataset(const DrbDataset &dataset) {
    std::vector<size_t> ds = dataset.depths();
    std::vector<double> depths(ds.begin(), ds.end());
    std::optional<double> a;
    if (dataset.design.n_qubits == 2) {
        a = TWO_QUBIT_ASYMPTOTE;
    }
    FitResult fit = fit_decay(depths, dataset.mean_success(), a);
    fit.error_rate = decay_to_error_rate(fit.p, dataset.design.n_qubits);
    return fit;
}

RateExtraction extract_rates(double e_low, double e_high) {
    // [[0.75, 0.25], [0.25, 0.75]]^-1 = [[1.5, -0.5], [-0.5, 1.5]]
    RateExtraction r;
    r.pair_error = 1.5 * e_low - 0.5 * e_high;
    r.r_2q = -0.5 * e_low + 1.5 * e_high;
    r.r_1q = r.pair_error <= 1 ? 1 - std::sqrt(1 - r.pair_error) : std::numeric_limits<double>::quiet_NaN();
    auto in_unit = [](double v) { return v >= 0 && v <= 1; };
    r.out_of_range = !in_unit(r.pair_error) || !in_unit(r.r_2q) || !in_unit(r.r_1q);
    return r;
}

DrbDataset resample_dataset(const DrbDataset &dataset, const FitResult &fit, uint64_t seed) {
    Rng rng(seed);
    DrbDataset out = dataset;
    for (auto &rec : out.records) {
        double s = std::clamp(fit.predict(static_cast<double>(rec.depth)), 0.0, 1.0);
        uint64_t k = 0;
        for (uint64_t shot = 0; shot < rec.shots; shot++) {
            k += uniform01(rng) < s ? 1 : 0;
        }
        rec.successes = k;
    }
    return out;
}

namespace {

BootstrapResult summarize(std::vector<double> samples) {
    BootstrapResult r;
    double n = static_cast<double>(samples.size());
    for (double v : samples) {
        r.mean += v;
    }
    r.mean /= n;
    double ss = 0;
    for (double v : samples) {
        ss += (v - r.mean) * (v - r.mean);
    }
    r.std = samples.size() > 1 ? std::sqrt(ss / (n - 1)) : 0;
    r.samples = std::move(samples);
    return r;
}

}  // namespace

BootstrapResult bootstrap_fit(const DrbDataset &dataset, const FitResult &fit, size_t n_resamples, uint64_t seed) {
    if (n_resamples < 1) {
        throw std::invalid_argument("bootstrap_fit: need at least one resample");
    }
    std::vector<double> samples(n_resamples);
    const auto n = static_cast<ptrdiff_t>(n_resamples);
#pragma omp parallel for schedule(dynamic)
    for (ptrdiff_t r = 0; r < n; r++) {
        DrbDataset redrawn = resample_dataset(dataset, fit, derive_seed(seed, "bootstrap", static_cast<uint64_t>(r)));
        samples[static_cast<size_t>(r)] = fit_dataset(redrawn).error_rate;
    }
    return summarize(std::move(samples));
}

BootstrapResult bootstrap_two_qubit_rate(const DrbDataset &low, const FitResult &low_fit, const DrbDataset &high,
                                         const FitResult &high_fit, size_t n_resamples, uint64_t seed) {
    if (n_resamples < 1) {
        throw std::invalid_argument("bootstrap_two_qubit_rate: need at least one resample");
    }
    std::vector<double> samples(n_resamples);
    const auto n = static_cast<ptrdiff_t>(n_resamples);
#pragma omp parallel for schedule(dynamic)
    for (ptrdiff_t r = 0; r < n; r++) {
        auto idx = static_cast<uint64_t>(r);
        double e_low = fit_dataset(resample_dataset(low, low_fit, derive_seed(seed, "bootstrap-low", idx))).error_rate;
        double e_high =
            fit_dataset(resample_dataset(high, high_fit, derive_seed(seed, "bootstrap-high", idx))).error_rate;
        samples[static_cast<size_t>(r)] = extract_rates(e_low, e_high).r_2q;
    }
    return summarize(std::move(samples));
}

double truncation_comparison(const DrbDataset &deep, size_t max_depth) {
    FitResult full = fit_dataset(deep);
    DrbDataset truncated{deep.design, {}};
    for (const auto &r : deep.records) {
        if (r.depth <= max_depth) {
            truncated.records.push_back(r);
        }
    }
    FitResult part = fit_dataset(truncated);
    if (full.p >= 1) {
        return part.p == full.p ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::abs(full.p - part.p) / (1 - full.p);
}

}  // namespace ionbench
