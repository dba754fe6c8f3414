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

#ifndef IONBENCH_SIMULATOR_NOISE_MODEL_H
#define IONBENCH_SIMULATOR_NOISE_MODEL_H

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ionbench {

/// Median 1Q DRB error rate of the benchmarked system.
constexpr double MEDIAN_EPS_1Q = 2.0e-4;
/// Median 2Q DRB error rate of the benchmarked system.
constexpr double MEDIAN_EPS_2Q = 46.4e-4;
/// Reported per-qubit SPAM error.
constexpr double REPORTED_SPAM = 0.005;

/// Depolarizing noise per physical gate plus classical readout flips.
///
/// Each physical gate on n qubits is followed by the channel
///   rho -> (1 - eps) rho + eps / (4^n - 1) * sum_{P != I} P rho P
/// with eps looked up per qubit (X90, Y90) or per unordered pair (XX, ZZ).
/// RZ is virtual and noiseless. Lookups without an override use the global
/// default.
struct NoiseModel {
    double eps_1q = 0;
    double eps_2q = 0;
    double spam_flip = 0;
    std::map<uint32_t, double> eps_1q_overrides;
    std::map<std::pair<uint32_t, uint32_t>, double> eps_2q_overrides;  // key has first < second
    std::map<uint32_t, double> spam_overrides;

    static NoiseModel uniform(double eps_1q, double eps_2q, double spam_flip = 0);
    /// Median rates with no SPAM.
    static NoiseModel median();

    double one_qubit(uint32_t q) const;
    double two_qubit(uint32_t a, uint32_t b) const;
    double spam(uint32_t q) const;
    void set_two_qubit(uint32_t a, uint32_t b, double eps);

    bool is_noiseless() const;

    /// Throws std::invalid_argument if any rate lies outside [0, 1].
    void validate() const;

    /// Model keyed by logical qubits, where logical q sits on physical
    /// `logical_to_physical[q]`.
    NoiseModel remapped(const std::vector<uint32_t> &logical_to_physical) const;

    bool operator==(const NoiseModel &) const = default;
};

/// {"eps_1q": x | {"default": x, "per_qubit": {"3": y}},
///  "eps_2q": x | {"default": x, "per_pair": {"2,5": y}},
///  "spam_flip": x | {"default": x, "per_qubit": {...}}}
/// Missing fields default to 0. Throws ParseError on malformed input.
NoiseModel noise_model_from_json(const std::string &text);
std::string noise_model_to_json(const NoiseModel &model);

}  // namespace ionbench

#endif
