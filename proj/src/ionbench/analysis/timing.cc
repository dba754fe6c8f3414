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

#include "ionbench/analysis/timing.h"

#include <sstream>
#include <stdexcept>

#include "ionbench/circuit/circuit_json.h"
#include "ionbench/util/errors.h"
#include "json.hpp"

namespace ionbench {

double TimingTable::zz_duration(uint32_t a, uint32_t b) const {
    auto it = zz_per_pair_us.find({std::min(a, b), std::max(a, b)});
    return it == zz_per_pair_us.end() ? zz_us : it->second;
}

void TimingTable::validate() const {
    if (!(single_qubit_us > 0) || !(zz_us > 0) || !(xx_us > 0)) {
        throw std::invalid_argument("timing table: gate durations must be positive");
    }
    for (const auto &[pair, d] : zz_per_pair_us) {
        if (!(d > 0)) {
            throw std::invalid_argument("timing table: zz_per_pair_us entries must be positive");
        }
    }
    if (rz_us < 0 || cooling_us < 0 || prep_us < 0 || readout_us < 0 || padding_us < 0) {
        throw std::invalid_argument("timing table: durations must not be negative");
    }
}

TimingTable timing_table_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        auto [line, col] = line_column_at(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("timing table: ") + e.what(), line, col);
    }
    TimingTable t;
    try {
        t.single_qubit_us = doc.value("single_qubit_us", t.single_qubit_us);
        t.zz_us = doc.value("zz_us", t.zz_us);
        t.xx_us = doc.value("xx_us", t.xx_us);
        t.rz_us = doc.value("rz_us", t.rz_us);
        t.cooling_us = doc.value("cooling_us", t.cooling_us);
        t.prep_us = doc.value("prep_us", t.prep_us);
        t.readout_us = doc.value("readout_us", t.readout_us);
        t.padding_us = doc.value("padding_us", t.padding_us);
        if (doc.contains("zz_per_pair_us")) {
            for (const auto &[key, value] : doc.at("zz_per_pair_us").items()) {
                auto comma = key.find(',');
                if (comma == std::string::npos) {
                    throw std::invalid_argument("pair key '" + key + "' must look like \"a,b\"");
                }
                auto a = static_cast<uint32_t>(std::stoul(key.substr(0, comma)));
                auto b = static_cast<uint32_t>(std::stoul(key.substr(comma + 1)));
                t.zz_per_pair_us[{std::min(a, b), std::max(a, b)}] = value.get<double>();
            }
        }
        t.validate();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("timing table: ") + e.what());
    } catch (const std::logic_error &e) {
        throw ParseError(std::string("timing table: ") + e.what());
    }
    return t;
}

std::string timing_table_to_json(const TimingTable &t) {
    std::ostringstream out;
    out << "{\"single_qubit_us\": " << format_double(t.single_qubit_us) << ", \"zz_us\": " << format_double(t.zz_us)
        << ", \"xx_us\": " << format_double(t.xx_us) << ", \"rz_us\": " << format_double(t.rz_us)
        << ", \"cooling_us\": " << format_double(t.cooling_us) << ", \"prep_us\": " << format_double(t.prep_us)
        << ", \"readout_us\": " << format_double(t.readout_us) << ", \"padding_us\": " << format_double(t.padding_us)
        << ", \"zz_per_pair_us\": {";
    bool first = true;
    for (const auto &[pair, d] : t.zz_per_pair_us) {
        out << (first ? "" : ", ") << "\"" << pair.first << "," << pair.second << "\": " << format_double(d);
        first = false;
    }
    out << "}}\n";
    return out.str();
}

ExecutionEstimate estimate_execution(const Circuit &circuit, const TimingTable &timing, uint64_t n_shots) {
    timing.validate();
    double gates = 0;
    for (const auto &e : circuit.elements()) {
        const auto *g = std::get_if<Gate>(&e);
        if (g == nullptr) {
            continue;
        }
        switch (g->kind) {
            case GateKind::X90:
            case GateKind::Y90:
                gates += timing.single_qubit_us;
                break;
            case GateKind::RZ:
                gates += timing.rz_us;
                continue;
            case GateKind::ZZ:
                gates += timing.zz_duration(g->qubits[0], g->qubits[1]);
                break;
            case GateKind::XX:
                gates += timing.xx_us;
                break;
            default:
                throw std::invalid_argument("estimate_execution: gate '" + std::string(gate_name(g->kind)) +
                                            "' is not native");
        }
        gates += timing.padding_us;
    }
    const double shots = static_cast<double>(n_shots);
    ExecutionEstimate est;
    est.gate_us_per_shot = gates;
    est.gate_us = shots * gates;
    est.total_us = shots * (timing.cooling_us + timing.prep_us + gates + timing.readout_us);
    est.gate_time_fraction = est.total_us > 0 ? est.gate_us / est.total_us : 0;
    return est;
}

}  // namespace ionbench
