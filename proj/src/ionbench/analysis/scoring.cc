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

#include "ionbench/analysis/scoring.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ionbench/circuit/circuit_json.h"

namespace ionbench {

std::string AqResult::coverage_warning() const {
    if (missing.empty()) {
        return "";
    }
    std::ostringstream out;
    out << "warning: score computed over available records only; missing (family, width):";
    for (const auto &[f, w] : missing) {
        out << " (" << f << ", " << w << ")";
    }
    return out.str();
}

AqResult aq_score_detailed(const std::vector<BenchmarkRecord> &records, bool use_voted, double threshold) {
    AqResult result;
    size_t max_width = 0;
    for (const auto &r : records) {
        max_width = std::max(max_width, r.w_c);
    }
    for (size_t n = 1; n <= max_width; n++) {
        bool ok = true;
        for (const auto &r : records) {
            if (r.w_c <= n && r.d_c <= n * n) {
                double f = use_voted ? r.f_voted : r.f_simple;
                if (!(f > threshold)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            result.score = n;
        }
    }
    std::map<std::string, std::set<size_t>> widths;
    for (const auto &r : records) {
        widths[r.family].insert(r.w_c);
    }
    for (const auto &[family, ws] : widths) {
        for (size_t w = *ws.begin(); w <= result.score; w++) {
            if (!ws.contains(w)) {
                result.missing.emplace_back(family, w);
            }
        }
    }
    return result;
}

size_t aq_score(const std::vector<BenchmarkRecord> &records, bool use_voted, double threshold) {
    return aq_score_detailed(records, use_voted, threshold).score;
}

const VolumetricCell *VolumetricTable::find(size_t width_bin, size_t depth_bin) const {
    for (const auto &c : cells) {
        if (c.width_bin == width_bin && c.depth_bin == depth_bin) {
            return &c;
        }
    }
    return nullptr;
}

std::string VolumetricTable::to_csv() const {
    std::ostringstream out;
    out << "width_lo,width_hi,depth_lo,depth_hi,count,value\n";
    for (const auto &c : cells) {
        out << width_edges[c.width_bin] << "," << width_edges[c.width_bin + 1] << "," << depth_edges[c.depth_bin]
            << "," << depth_edges[c.depth_bin + 1] << "," << c.count << "," << format_double(c.value) << "\n";
    }
    return out.str();
}

std::vector<size_t> power_of_two_edges(size_t max_value) {
    std::vector<size_t> edges{0, 1};
    while (edges.back() <= max_value) {
        edges.push_back(edges.back() * 2);
    }
    return edges;
}

namespace {

void check_edges(const std::vector<size_t> &edges, const char *name) {
    if (edges.size() < 2) {
        throw std::invalid_argument(std::string("volumetric_table: ") + name + " needs at least two edges");
    }
    for (size_t k = 1; k < edges.size(); k++) {
        if (edges[k] <= edges[k - 1]) {
            throw std::invalid_argument(std::string("volumetric_table: ") + name + " must be strictly increasing");
        }
    }
}

size_t bin_of(const std::vector<size_t> &edges, size_t value, const char *name) {
    if (value < edges.front() || value >= edges.back()) {
        throw std::invalid_argument(std::string("volumetric_table: value ") + std::to_string(value) +
                                    " outside the " + name);
    }
    return static_cast<size_t>(std::upper_bound(edges.begin(), edges.end(), value) - edges.begin()) - 1;
}

}  // namespace

VolumetricTable volumetric_table(const std::vector<BenchmarkRecord> &records, const std::vector<size_t> &width_edges,
                                 const std::vector<size_t> &depth_edges, Aggregate aggregate, FidelityKind fidelity,
                                 DepthAxis depth_axis) {
    check_edges(width_edges, "width bins");
    check_edges(depth_edges, "depth bins");
    std::map<std::pair<size_t, size_t>, std::vector<double>> groups;
    for (const auto &r : records) {
        double f = record_fidelity(r, fidelity);
        if (std::isnan(f)) {
            continue;
        }
        size_t depth = depth_axis == DepthAxis::Compiled ? r.compiled_2q : r.d_c;
        groups[{bin_of(width_edges, r.w_c, "width bins"), bin_of(depth_edges, depth, "depth bins")}].push_back(f);
    }
    VolumetricTable table{width_edges, depth_edges, {}};
    for (const auto &[key, values] : groups) {
        double v;
        if (aggregate == Aggregate::Mean) {
            v = 0;
            for (double x : values) {
                v += x;
            }
            v /= static_cast<double>(values.size());
        } else {
            v = *std::min_element(values.begin(), values.end());
        }
        table.cells.push_back({key.first, key.second, values.size(), v});
    }
    return table;
}

VolumetricTable volumetric_difference(const VolumetricTable &a, const VolumetricTable &b) {
    if (a.width_edges != b.width_edges || a.depth_edges != b.depth_edges) {
        throw std::invalid_argument("volumetric_difference: tables use different bins");
    }
    VolumetricTable out{a.width_edges, a.depth_edges, {}};
    for (const auto &c : a.cells) {
        if (const VolumetricCell *o = b.find(c.width_bin, c.depth_bin)) {
            out.cells.push_back({c.width_bin, c.depth_bin, std::min(c.count, o->count), c.value - o->value});
        }
    }
    return out;
}

DecaySlope decay_slope(const std::vector<BenchmarkRecord> &records, FidelityKind fidelity) {
    DecaySlope out;
    double num = 0;
    double den = 0;
    for (const auto &r : records) {
        double f = record_fidelity(r, fidelity);
        if (std::isnan(f)) {
            continue;
        }
        if (f <= 0) {
            out.warnings.push_back("excluded " + r.family + " (w_c=" + std::to_string(r.w_c) +
                                   ", compiled_2q=" + std::to_string(r.compiled_2q) + "): fidelity is zero");
            continue;
        }
        double n = static_cast<double>(r.compiled_2q);
        num += n * -std::log(f);
        den += n * n;
        out.used++;
    }
    if (out.used < 3) {
        throw std::invalid_argument("decay_slope: need at least 3 records with positive fidelity");
    }
    if (den <= 0) {
        throw std::invalid_argument("decay_slope: all records have zero two-qubit gates");
    }
    out.rate = num / den;
    return out;
}

}  // namespace ionbench
