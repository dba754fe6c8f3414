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

#include "ionbench/simulator/noise_model.h"

#include <stdexcept>

#include "ionbench/util/errors.h"
#include "json.hpp"

namespace ionbench {

namespace {

std::pair<uint32_t, uint32_t> pair_key(uint32_t a, uint32_t b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void check_rate(double rate, const std::string &what) {
    if (!(rate >= 0 && rate <= 1)) {
        throw std::invalid_argument("noise rate " + what + " = " + std::to_string(rate) + " outside [0, 1]");
    }
}

uint32_t parse_index(const std::string &text) {
    size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument("bad index '" + text + "'");
    }
    return static_cast<uint32_t>(v);
}

}  // namespace

NoiseModel NoiseModel::uniform(double eps_1q, double eps_2q, double spam_flip) {
    NoiseModel m;
    m.eps_1q = eps_1q;
    m.eps_2q = eps_2q;
    m.spam_flip = spam_flip;
    m.validate();
    return m;
}

NoiseModel NoiseModel::median() {
    return uniform(MEDIAN_EPS_1Q, MEDIAN_EPS_2Q, 0);
}

double NoiseModel::one_qubit(uint32_t q) const {
    auto it = eps_1q_overrides.find(q);
    return it == eps_1q_overrides.end() ? eps_1q : it->second;
}

double NoiseModel::two_qubit(uint32_t a, uint32_t b) const {
    auto it = eps_2q_overrides.find(pair_key(a, b));
    return it == eps_2q_overrides.end() ? eps_2q : it->second;
}

double NoiseModel::spam(uint32_t q) const {
    auto it = spam_overrides.find(q);
    return it == spam_overrides.end() ? spam_flip : it->second;
}

void NoiseModel::set_two_qubit(uint32_t a, uint32_t b, double eps) {
    eps_2q_overrides[pair_key(a, b)] = eps;
}

bool NoiseModel::is_noiseless() const {
    if (eps_1q != 0 || eps_2q != 0 || spam_flip != 0) {
        return false;
    }
    for (const auto *m : {&eps_1q_overrides, &spam_overrides}) {
        for (const auto &[q, v] : *m) {
            if (v != 0) {
                return false;
            }
        }
    }
    for (const auto &[p, v] : eps_2q_overrides) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

void NoiseModel::validate() const {
    check_rate(eps_1q, "eps_1q");
    check_rate(eps_2q, "eps_2q");
    check_rate(spam_flip, "spam_flip");
    for (const auto &[q, v] : eps_1q_overrides) {
        check_rate(v, "eps_1q[" + std::to_string(q) + "]");
    }
    for (const auto &[p, v] : eps_2q_overrides) {
        check_rate(v, "eps_2q[" + std::to_string(p.first) + "," + std::to_string(p.second) + "]");
    }
    for (const auto &[q, v] : spam_overrides) {
        check_rate(v, "spam_flip[" + std::to_string(q) + "]");
    }
}

NoiseModel NoiseModel::remapped(const std::vector<uint32_t> &logical_to_physical) const {
    NoiseModel out;
    out.eps_1q = eps_1q;
    out.eps_2q = eps_2q;
    out.spam_flip = spam_flip;
    const auto n = static_cast<uint32_t>(logical_to_physical.size());
    for (uint32_t q = 0; q < n; q++) {
        uint32_t p = logical_to_physical[q];
        if (auto it = eps_1q_overrides.find(p); it != eps_1q_overrides.end()) {
            out.eps_1q_overrides[q] = it->second;
        }
        if (auto it = spam_overrides.find(p); it != spam_overrides.end()) {
            out.spam_overrides[q] = it->second;
        }
        for (uint32_t r = q + 1; r < n; r++) {
            auto it = eps_2q_overrides.find(pair_key(p, logical_to_physical[r]));
            if (it != eps_2q_overrides.end()) {
                out.eps_2q_overrides[{q, r}] = it->second;
            }
        }
    }
    return out;
}

NoiseModel noise_model_from_json(const std::string &text) {
    nlohmann::json value;
    try {
        value = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &ex) {
        auto [line, column] = line_column_at(text, ex.byte > 0 ? ex.byte - 1 : 0);
        throw ParseError(std::string("malformed noise model: ") + ex.what(), line, column);
    }
    NoiseModel m;
    try {
        auto read_per_qubit = [&](const char *field, double &global, std::map<uint32_t, double> &overrides) {
            if (!value.contains(field)) {
                return;
            }
            const auto &f = value[field];
            if (f.is_number()) {
                global = f.get<double>();
                return;
            }
            global = f.value("default", 0.0);
            if (f.contains("per_qubit")) {
                for (const auto &[k, v] : f["per_qubit"].items()) {
                    overrides[parse_index(k)] = v.get<double>();
                }
            }
        };
        read_per_qubit("eps_1q", m.eps_1q, m.eps_1q_overrides);
        read_per_qubit("spam_flip", m.spam_flip, m.spam_overrides);
        if (value.contains("eps_2q")) {
            const auto &f = value["eps_2q"];
            if (f.is_number()) {
                m.eps_2q = f.get<double>();
            } else {
                m.eps_2q = f.value("default", 0.0);
                if (f.contains("per_pair")) {
                    for (const auto &[k, v] : f["per_pair"].items()) {
                        auto comma = k.find(',');
                        if (comma == std::string::npos) {
                            throw std::invalid_argument("pair key '" + k + "' must look like 'i,j'");
                        }
                        m.set_two_qubit(parse_index(k.substr(0, comma)), parse_index(k.substr(comma + 1)),
                                        v.get<double>());
                    }
                }
            }
        }
        m.validate();
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("bad noise model: ") + ex.what());
    } catch (const std::invalid_argument &ex) {
        throw ParseError(std::string("bad noise model: ") + ex.what());
    }
    return m;
}

std::string noise_model_to_json(const NoiseModel &m) {
    nlohmann::json out;
    nlohmann::json q1{{"default", m.eps_1q}, {"per_qubit", nlohmann::json::object()}};
    for (const auto &[q, v] : m.eps_1q_overrides) {
        q1["per_qubit"][std::to_string(q)] = v;
    }
    nlohmann::json q2{{"default", m.eps_2q}, {"per_pair", nlohmann::json::object()}};
    for (const auto &[p, v] : m.eps_2q_overrides) {
        q2["per_pair"][std::to_string(p.first) + "," + std::to_string(p.second)] = v;
    }
    nlohmann::json sp{{"default", m.spam_flip}, {"per_qubit", nlohmann::json::object()}};
    for (const auto &[q, v] : m.spam_overrides) {
        sp["per_qubit"][std::to_string(q)] = v;
    }
    out["eps_1q"] = q1;
    out["eps_2q"] = q2;
    out["spam_flip"] = sp;
    return out.dump(2) + "\n";
}

}  // namespace ionbench
