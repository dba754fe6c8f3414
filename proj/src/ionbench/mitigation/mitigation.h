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

#ifndef IONBENCH_MITIGATION_MITIGATION_H
#define IONBENCH_MITIGATION_MITIGATION_H

#include <cstdint>
#include <span>
#include <vector>

#include "ionbench/simulator/histogram.h"

namespace ionbench {

constexpr size_t DEFAULT_VOTE_THRESHOLD = 7;

/// Sums the counts of all variants and normalizes. Histograms must already be
/// on logical qubits. Throws std::invalid_argument if the list is empty, widths
/// differ, or there are no shots.
Distribution simple_aggregate(std::span<const Histogram> variants);

/// Probability that exactly m of the independent events with probabilities
/// `freqs` occur. O(N^2) convolution. Throws std::invalid_argument if m > N
/// or any probability is outside [0, 1].
double poisson_binomial_pmf(std::span<const double> freqs, size_t m);

/// Full pmf over m = 0..N.
std::vector<double> poisson_binomial_distribution(std::span<const double> freqs);

struct VoteOutcome {
    Distribution distribution;
    /// Threshold at which voting produced a result; 0 if it fell back.
    size_t threshold = 0;
    bool fell_back = false;
};

/// Plurality-vote aggregation computed exactly.
///
/// Starting at t = t_start and decrementing by one: drop bitstrings seen in
/// fewer than t variants, drop variants left with nothing, and weight each
/// surviving bitstring b by P(at least t of the remaining variants yield b
/// when each is sampled once); the weights are normalized. If nothing
/// survives even at t = 2 the simple aggregate is returned.
/// Throws std::invalid_argument on inconsistent widths, zero shots, or
/// t_start < 2.
VoteOutcome plurality_vote_detailed(std::span<const Histogram> variants, size_t t_start = DEFAULT_VOTE_THRESHOLD);
Distribution plurality_vote(std::span<const Histogram> variants, size_t t_start = DEFAULT_VOTE_THRESHOLD);

/// Monte Carlo form of the vote used to check plurality_vote: each round
/// draws one shot from every variant; each bitstring tied for the largest
/// count gets a vote if that count is at least t. Threshold t draws from the
/// stream (seed, "vote-round", t). Same threshold descent and fallback.
Distribution plurality_vote_mc(std::span<const Histogram> variants, size_t t_start, uint64_t rounds, uint64_t seed);

}  // namespace ionbench

#endif
