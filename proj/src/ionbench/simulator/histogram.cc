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

#include "ionbench/simulator/histogram.h"

#include <cmath>
#include <stdexcept>

#include "ionbench/util/errors.h"
#include "json.hpp"

namespace ionbench {

namespace {

nlohmann::json parse_document(const std::string &text, const char *what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &ex) {
        auto [line, column] = line_column_at(text, ex.byte > 0 ? ex.byte - 1 : 0);
        throw ParseError(std::string("malformed ") + what + ": " + ex.what(), line, column);
    }
}

Bits checked_bitstring(const std::string &key, size_t width) {
    if (key.size() != width) {
        throw ParseError("bitstring '" + key + "' has length " + std::to_string(key.size()) + ", expected width " +
                         std::to_string(width));
    }
    try {
        return parse_bitstring(key);
    } catch (const std::invalid_argument &ex) {
        throw ParseError(ex.what());
    }
}

}  // namespace

uint64_t Histogram::shots() const {
    uint64_t total = 0;
    for (const auto &[b, n] : counts) {
        total += n;
    }
    return total;
}

double Distribution::total() const {
    double total = 0;
    for (const auto &[b, p] : probs) {
        total += p;
    }
    return total;
}

double Distribution::prob(Bits outcome) const {
    auto it = probs.find(outcome);
    return it == probs.end() ? 0.0 : it->second;
}

Distribution normalize(const Histogram &histogram) {
    uint64_t shots = histogram.shots();
    if (shots == 0) {
        throw std::invalid_argument("cannot normalize a histogram with zero shots");
    }
    Distribution out{histogram.width, {}};
    for (const auto &[b, n] : histogram.counts) {
        if (n > 0) {
            out.probs[b] = static_cast<double>(n) / static_cast<double>(shots);
        }
    }
    return out;
}

Distribution renormalized(const Distribution &distribution) {
    double total = distribution.total();
    if (!(total > 0)) {
        throw std::invalid_argument("cannot renormalize a distribution with non-positive total");
    }
    Distribution out{distribution.width, {}};
    for (const auto &[b, p] : distribution.probs) {
        out.probs[b] = p / total;
    }
    return out;
}

Histogram to_logical(const Histogram &physical, const std::vector<uint32_t> &logical_to_physical) {
    Histogram out{logical_to_physical.size(), {}};
    for (const auto &[b, n] : physical.counts) {
        Bits logical = 0;
        for (size_t q = 0; q < logical_to_physical.size(); q++) {
            logical |= ((b >> logical_to_physical[q]) & 1) << q;
        }
        out.counts[logical] += n;
    }
    return out;
}

double total_variation(const Distribution &p, const Distribution &q) {
    double sum = 0;
    for (const auto &[b, v] : p.probs) {
        sum += std::abs(v - q.prob(b));
    }
    for (const auto &[b, v] : q.probs) {
        if (!p.probs.contains(b)) {
            sum += std::abs(v);
        }
    }
    return sum / 2;
}

std::string histogram_to_json(const Histogram &histogram) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto &[b, n] : histogram.counts) {
        counts[to_bitstring(b, histogram.width)] = n;
    }
    nlohmann::json out{{"width", histogram.width}, {"shots", histogram.shots()}, {"counts", counts}};
    return out.dump(1) + "\n";
}

Histogram histogram_from_json(const std::string &text) {
    auto value = parse_document(text, "histogram");
    try {
        Histogram h{value.at("width").get<size_t>(), {}};
        for (const auto &[k, v] : value.at("counts").items()) {
            h.counts[checked_bitstring(k, h.width)] += v.get<uint64_t>();
        }
        if (value.contains("shots") && value["shots"].get<uint64_t>() != h.shots()) {
            throw ParseError("histogram 'shots' does not equal the sum of counts");
        }
        return h;
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("bad histogram: ") + ex.what());
    }
}

std::string distribution_to_json(const Distribution &distribution) {
    nlohmann::json probs = nlohmann::json::object();
    for (const auto &[b, p] : distribution.probs) {
        probs[to_bitstring(b, distribution.width)] = p;
    }
    nlohmann::json out{{"width", distribution.width}, {"probs", probs}};
    return out.dump(1) + "\n";
}

Distribution distribution_from_json(const std::string &text) {
    auto value = parse_document(text, "distribution");
    try {
        Distribution d{value.at("width").get<size_t>(), {}};
        for (const auto &[k, v] : value.at("probs").items()) {
            double p = v.get<double>();
            if (!(p >= 0)) {
                throw ParseError("negative probability for '" + k + "'");
            }
            if (p > 0) {
                d.probs[checked_bitstring(k, d.width)] += p;
            }
        }
        return d;
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("bad distribution: ") + ex.what());
    }
}

}  // namespace ionbench
