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

#include "ionbench/drb/drb.h"

#include <algorithm>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ionbench/circuit/circuit_json.h"
#include "ionbench/drb/clifford.h"
#include "ionbench/util/errors.h"
#include "ionbench/util/rng.h"
#include "json.hpp"

namespace ionbench {

DrbDesign DrbDesign::one_qubit_default() {
    return {1, {1, 10, 100, 1000}, 4, 100, 0};
}

DrbDesign DrbDesign::two_qubit_default(double p_2q) {
    return {2, {1, 5, 22, 100}, 4, 100, p_2q};
}

DrbDesign DrbDesign::two_qubit_deep(double p_2q, size_t shots_per_circuit) {
    DrbDesign d{2, {}, 4, shots_per_circuit, p_2q};
    for (size_t depth = 1; depth <= 1000; depth += 111) {
        d.depths.push_back(depth);
    }
    return d;
}

void DrbDesign::validate() const {
    if (n_qubits != 1 && n_qubits != 2) {
        throw std::invalid_argument("DrbDesign.n_qubits must be 1 or 2");
    }
    if (depths.empty()) {
        throw std::invalid_argument("DrbDesign.depths must not be empty");
    }
    for (size_t k = 0; k < depths.size(); k++) {
        if (k > 0 && depths[k] <= depths[k - 1]) {
            throw std::invalid_argument("DrbDesign.depths must be strictly increasing");
        }
    }
    if (circuits_per_depth < 1) {
        throw std::invalid_argument("DrbDesign.circuits_per_depth must be >= 1");
    }
    if (shots_per_circuit < 1) {
        throw std::invalid_argument("DrbDesign.shots_per_circuit must be >= 1");
    }
    if (!(p_2q >= 0 && p_2q <= 1)) {
        throw std::invalid_argument("DrbDesign.p_2q must lie in [0, 1]");
    }
}

DrbCircuit sample_drb_circuit(const DrbDesign &design, size_t depth, uint64_t seed) {
    design.validate();
    const size_t n = design.n_qubits;
    Rng rng(seed);
    DrbCircuit out{Circuit(n), 0, {}};
    Tableau tableau(n);
    size_t gate_index = 0;
    auto emit = [&](const Gate &g) {
        out.circuit.append(g);
        tableau.apply(g);
        gate_index++;
    };

    const CliffordTable &single = CliffordTable::get(1);
    for (uint32_t q = 0; q < n; q++) {
        for (const Gate &g : single.sequence(uniform_index(rng, single.size()))) {
            emit(Gate::make(g.kind, {q}, g.angle));
        }
    }
    out.circuit.barrier();

    for (size_t layer = 0; layer < depth; layer++) {
        out.layer_start.push_back(gate_index);
        if (n == 2 && uniform01(rng) < design.p_2q) {
            emit(Gate::xx(0, 1, std::numbers::pi / 4));
        } else {
            for (uint32_t q = 0; q < n; q++) {
                emit(uniform_index(rng, 2) == 0 ? Gate::x90(q) : Gate::y90(q));
            }
        }
        out.circuit.barrier();
    }
    out.layer_start.push_back(gate_index);

    const Tableau so_far = tableau;
    for (const Gate &g : CliffordTable::get(n).inverse_of(so_far)) {
        emit(g);
    }
    if (!tableau.is_identity()) {
        throw std::logic_error("sample_drb_circuit: inversion failed");
    }
    return out;
}

std::vector<size_t> DrbDataset::depths() const {
    std::set<size_t> s;
    for (const auto &r : records) {
        s.insert(r.depth);
    }
    return {s.begin(), s.end()};
}

std::vector<double> DrbDataset::mean_success() const {
    std::vector<size_t> ds = depths();
    std::vector<double> succ(ds.size(), 0);
    std::vector<double> shots(ds.size(), 0);
    for (const auto &r : records) {
        size_t k = static_cast<size_t>(std::lower_bound(ds.begin(), ds.end(), r.depth) - ds.begin());
        succ[k] += static_cast<double>(r.successes);
        shots[k] += static_cast<double>(r.shots);
    }
    for (size_t k = 0; k < ds.size(); k++) {
        succ[k] = shots[k] > 0 ? succ[k] / shots[k] : 0;
    }
    return succ;
}

DrbDataset run_drb(const DrbDesign &design, const NoiseModel &noise, uint64_t seed, const DrbRunOptions &options) {
    design.validate();
    DrbDataset data{design, {}};
    const size_t nc = design.circuits_per_depth;
    for (size_t i = 0; i < design.depths.size(); i++) {
        for (size_t k = 0; k < nc; k++) {
            uint64_t task = i * nc + k;
            DrbCircuit dc = sample_drb_circuit(design, design.depths[i], derive_seed(seed, "drb-circuit", task));
            SimOptions sim = options.sim;
            std::vector<double> scale;
            if (options.drift_after < design.depths[i]) {
                scale.assign(dc.circuit.gate_count(), 1.0);
                for (size_t g = dc.layer_start[options.drift_after]; g < dc.layer_start.back(); g++) {
                    scale[g] = options.drift_factor;
                }
                sim.gate_noise_scale = scale;
            }
            Histogram h = run_shots(dc.circuit, noise, design.shots_per_circuit, derive_seed(seed, "drb-shots", task), sim);
            auto it = h.counts.find(dc.ideal_outcome);
            uint64_t successes = it == h.counts.end() ? 0 : it->second;
            data.records.push_back({design.depths[i], k, successes, h.shots()});
        }
    }
    return data;
}

std::string drb_dataset_to_json(const DrbDataset &dataset) {
    const DrbDesign &d = dataset.design;
    std::ostringstream out;
    out << "{\"design\": {\"n_qubits\": " << d.n_qubits << ", \"depths\": [";
    for (size_t k = 0; k < d.depths.size(); k++) {
        out << (k ? ", " : "") << d.depths[k];
    }
    out << "], \"circuits_per_depth\": " << d.circuits_per_depth << ", \"shots_per_circuit\": " << d.shots_per_circuit
        << ", \"p_2q\": " << format_double(d.p_2q) << "},\n \"records\": [";
    for (size_t k = 0; k < dataset.records.size(); k++) {
        const auto &r = dataset.records[k];
        out << (k ? ",\n  " : "\n  ") << "{\"depth\": " << r.depth << ", \"circuit_index\": " << r.circuit_index
            << ", \"successes\": " << r.successes << ", \"shots\": " << r.shots << "}";
    }
    out << "\n]}\n";
    return out.str();
}

DrbDataset drb_dataset_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        auto [line, col] = line_column_at(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("DRB dataset: ") + e.what(), line, col);
    }
    try {
        DrbDataset data;
        const auto &d = doc.at("design");
        data.design.n_qubits = d.at("n_qubits").get<size_t>();
        data.design.depths = d.at("depths").get<std::vector<size_t>>();
        data.design.circuits_per_depth = d.at("circuits_per_depth").get<size_t>();
        data.design.shots_per_circuit = d.at("shots_per_circuit").get<size_t>();
        data.design.p_2q = d.value("p_2q", 0.0);
        data.design.validate();
        for (const auto &r : doc.at("records")) {
            DrbRecord rec{r.at("depth").get<size_t>(), r.at("circuit_index").get<size_t>(),
                          r.at("successes").get<uint64_t>(), r.at("shots").get<uint64_t>()};
            if (rec.successes > rec.shots) {
                throw std::invalid_argument("record has more successes than shots");
            }
            data.records.push_back(rec);
        }
        return data;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("DRB dataset: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("DRB dataset: ") + e.what());
    }
}

}  // namespace ionbench
