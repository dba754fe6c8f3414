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

#include "ionbench/mitigation/mitigation.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ionbench/util/rng.h"

namespace ionbench {

namespace {

void check_variants(std::span<const Histogram> variants, const char *who) {
    if (variants.empty()) {
        throw std::invalid_argument(std::string(who) + ": no variant histograms");
    }
    for (const auto &h : variants) {
        if (h.width != variants[0].width) {
            throw std::invalid_argument(std::string(who) + ": variant histograms differ in width");
        }
    }
}

/// Per-variant empirical frequencies.
std::vector<Distribution> frequencies(std::span<const Histogram> variants) {
    std::vector<Distribution> out;
    for (const auto &h : variants) {
        if (h.shots() == 0) {
            out.push_back({h.width, {}});
        } else {
            out.push_back(normalize(h));
        }
    }
    return out;
}

uint64_t total_shots(std::span<const Histogram> variants) {
    uint64_t n = 0;
    for (const auto &h : variants) {
        n += h.shots();
    }
    return n;
}

/// Bitstring -> number of variants containing it.
std::map<Bits, size_t> variant_support(std::span<const Histogram> variants) {
    std::map<Bits, size_t> seen;
    for (const auto &h : variants) {
        for (const auto &[b, c] : h.counts) {
            if (c > 0) {
                seen[b]++;
            }
        }
    }
    return seen;
}

}  // namespace

Distribution simple_aggregate(std::span<const Histogram> variants) {
    check_variants(variants, "simple_aggregate");
    Histogram sum{variants[0].width, {}};
    for (const auto &h : variants) {
        for (const auto &[b, c] : h.counts) {
            if (c > 0) {
                sum.add(b, c);
            }
        }
    }
    if (sum.shots() == 0) {
        throw std::invalid_argument("simple_aggregate: variants contain no shots");
    }
    return normalize(sum);
}

std::vector<double> poisson_binomial_distribution(std::span<const double> freqs) {
    std::vector<double> pmf(freqs.size() + 1, 0.0);
    pmf[0] = 1;
    for (size_t v = 0; v < freqs.size(); v++) {
        double f = freqs[v];
        if (!(f >= 0 && f <= 1)) {
            throw std::invalid_argument("poisson_binomial: probabilities must lie in [0, 1]");
        }
        for (size_t m = v + 1; m > 0; m--) {
            pmf[m] = pmf[m] * (1 - f) + pmf[m - 1] * f;
        }
        pmf[0] *= 1 - f;
    }
    return pmf;
}

double poisson_binomial_pmf(std::span<const double> freqs, size_t m) {
    if (m > freqs.size()) {
        throw std::invalid_argument("poisson_binomial_pmf: m exceeds the number of variants");
    }
    return poisson_binomial_distribution(freqs)[m];
}

VoteOutcome plurality_vote_detailed(std::span<const Histogram> variants, size_t t_start) {
    check_variants(variants, "plurality_vote");
    if (t_start < 2) {
        throw std::invalid_argument("plurality_vote: threshold must be at least 2");
    }
    if (total_shots(variants) == 0) {
        throw std::invalid_argument("plurality_vote: variants contain no shots");
    }
    const std::vector<Distribution> freqs = frequencies(variants);
    const std::map<Bits, size_t> support = variant_support(variants);

    for (size_t t = t_start; t >= 2; t--) {
        std::vector<Bits> survivors;
        for (const auto &[b, n] : support) {
            if (n >= t) {
                survivors.push_back(b);
            }
        }
        if (survivors.empty()) {
            continue;
        }
        // Variants with no surviving bitstring never contribute a vote.
        std::vector<const Distribution *> active;
        for (const auto &f : freqs) {
            bool any = std::any_of(survivors.begin(), survivors.end(), [&](Bits b) { return f.prob(b) > 0; });
            if (any) {
                active.push_back(&f);
            }
        }
        const size_t nv = active.size();
        Distribution out{variants[0].width, {}};
        std::vector<double> fb(nv);
        for (Bits b : survivors) {
            for (size_t v = 0; v < nv; v++) {
                fb[v] = active[v]->prob(b);
            }
            std::vector<double> pmf = poisson_binomial_distribution(fb);
            double p = 0;
            if (2 * t < nv) {
                double below = 0;
                for (size_t m = 0; m < t; m++) {
                    below += pmf[m];
                }
                p = 1 - below;
            } else {
                for (size_t m = t; m <= nv; m++) {
                    p += pmf[m];
                }
            }
            if (p > 0) {
                out.probs[b] = p;
            }
        }
        if (out.total() > 0) {
            return {renormalized(out), t, false};
        }
    }
    return {simple_aggregate(variants), 0, true};
}

Distribution plurality_vote(std::span<const Histogram> variants, size_t t_start) {
    return plurality_vote_detailed(variants, t_start).distribution;
}

Distribution plurality_vote_mc(std::span<const Histogram> variants, size_t t_start, uint64_t rounds, uint64_t seed) {
    check_variants(variants, "plurality_vote_mc");
    if (t_start < 2) {
        throw std::invalid_argument("plurality_vote_mc: threshold must be at least 2");
    }
    if (total_shots(variants) == 0) {
        throw std::invalid_argument("plurality_vote_mc: variants contain no shots");
    }
    // Cumulative tables for sampling one shot per variant.
    struct Sampler {
        std::vector<Bits> outcomes;
        std::vector<uint64_t> cumulative;
        uint64_t shots = 0;
    };
    std::vector<Sampler> samplers;
    for (const auto &h : variants) {
        if (h.shots() == 0) {
            continue;
        }
        Sampler s;
        for (const auto &[b, c] : h.counts) {
            if (c > 0) {
                s.shots += c;
                s.outcomes.push_back(b);
                s.cumulative.push_back(s.shots);
            }
        }
        samplers.push_back(std::move(s));
    }

    std::vector<std::pair<Bits, size_t>> tally;
    for (size_t t = t_start; t >= 2; t--) {
        std::map<Bits, uint64_t> votes;
        Rng rng = make_rng(seed, "vote-round", t);
        for (uint64_t r = 0; r < rounds; r++) {
            tally.clear();
            for (const Sampler &s : samplers) {
                uint64_t k = uniform_index(rng, s.shots);
                auto at = static_cast<size_t>(std::upper_bound(s.cumulative.begin(), s.cumulative.end(), k) -
                                              s.cumulative.begin());
                Bits b = s.outcomes[at];
                auto it = std::find_if(tally.begin(), tally.end(), [b](const auto &e) { return e.first == b; });
                if (it == tally.end()) {
                    tally.emplace_back(b, 1);
                } else {
                    it->second++;
                }
            }
            size_t top = 0;
            for (const auto &[b, n] : tally) {
                top = std::max(top, n);
            }
            if (top < t) {
                continue;
            }
            for (const auto &[b, n] : tally) {
                if (n == top) {
                    votes[b]++;
                }
            }
        }
        if (!votes.empty()) {
            Distribution out{variants[0].width, {}};
            for (const auto &[b, n] : votes) {
                out.probs[b] = static_cast<double>(n);
            }
            return renormalized(out);
        }
    }
    return simple_aggregate(variants);
}

}  // namespace ionbench
