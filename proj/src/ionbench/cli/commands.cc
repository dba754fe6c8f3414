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

#include "ionbench/cli/commands.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ionbench/analysis/fidelity.h"
#include "ionbench/analysis/records.h"
#include "ionbench/analysis/regression.h"
#include "ionbench/analysis/scoring.h"
#include "ionbench/analysis/timing.h"
#include "ionbench/circuit/circuit_json.h"
#include "ionbench/compiler/decompose.h"
#include "ionbench/compiler/variants.h"
#include "ionbench/drb/drb.h"
#include "ionbench/drb/fit.h"
#include "ionbench/mitigation/mitigation.h"
#include "ionbench/simulator/noise_model.h"
#include "ionbench/simulator/trajectory.h"
#include "ionbench/util/errors.h"
#include "ionbench/util/rng.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ionbench::cli {

namespace fs = std::filesystem;

const std::vector<std::string> COMMANDS{"drb", "bench", "score", "vote", "timing"};

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read file '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path &path, const std::string &text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file '" + path.string() + "'");
    }
    out << text;
}

Params common_defaults() {
    return {{"seed", 1}, {"out", "ionbench-out"}, {"workers", 0}, {"noise", "median"}};
}

/// Parameter accessors reporting the field name on type errors.
template <typename T>
T get(const Params &p, const std::string &key) {
    if (!p.contains(key)) {
        throw UsageError("missing parameter '" + key + "'");
    }
    try {
        return p.at(key).get<T>();
    } catch (const nlohmann::json::exception &) {
        throw UsageError("parameter '" + key + "' has the wrong type: " + p.at(key).dump());
    }
}

/// Noise model from "median", "none", a file path, or an inline object.
NoiseModel load_noise(const Params &value) {
    if (value.is_object()) {
        return noise_model_from_json(value.dump());
    }
    if (!value.is_string()) {
        throw UsageError("parameter 'noise' must be \"median\", \"none\", a file path or an object");
    }
    std::string s = value.get<std::string>();
    if (s == "median") {
        return NoiseModel::median();
    }
    if (s == "none") {
        return NoiseModel{};
    }
    return noise_model_from_json(read_file(s));
}

TimingTable load_timing(const Params &value) {
    if (value.is_null()) {
        return TimingTable{};
    }
    if (value.is_object()) {
        return timing_table_from_json(value.dump());
    }
    if (!value.is_string()) {
        throw UsageError("parameter 'timing' must be a file path or an object");
    }
    return timing_table_from_json(read_file(value.get<std::string>()));
}

std::string sanitize(std::string name) {
    for (char &c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') {
            c = '_';
        }
    }
    return name;
}

void write_manifest(const std::string &command, Params params, const fs::path &out_dir) {
    params.erase("workers");
    Params manifest{{"command", command}, {"params", params}};
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

// drb ---------------------------------------------------------------------

std::vector<std::pair<uint32_t, uint32_t>> resolve_pairs(const Params &p) {
    const auto width = get<uint32_t>(p, "width");
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    const Params &spec = p.at("pairs");
    if (spec.is_string()) {
        if (spec.get<std::string>() != "all") {
            throw UsageError("parameter 'pairs' must be \"all\" or a list of [i, j]");
        }
        for (uint32_t i = 0; i < width; i++) {
            for (uint32_t j = i + 1; j < width; j++) {
                pairs.emplace_back(i, j);
            }
        }
    } else if (spec.is_array()) {
        for (const auto &e : spec) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
                e[0].get<int64_t>() < 0 || e[1].get<int64_t>() < 0) {
                throw UsageError("parameter 'pairs': every entry must be [i, j]");
            }
            auto i = e[0].get<uint32_t>();
            auto j = e[1].get<uint32_t>();
            if (i == j || i >= width || j >= width) {
                throw UsageError("parameter 'pairs': pair [" + std::to_string(i) + ", " + std::to_string(j) +
                                 "] is invalid for width " + std::to_string(width));
            }
            pairs.emplace_back(std::min(i, j), std::max(i, j));
        }
    } else {
        throw UsageError("parameter 'pairs' must be \"all\" or a list of [i, j]");
    }
    if (pairs.empty()) {
        throw UsageError("parameter 'pairs' selects no qubit pairs");
    }
    return pairs;
}

DrbDesign design_from(const Params &p, size_t n_qubits, double p_2q) {
    DrbDesign d = n_qubits == 1 ? DrbDesign::one_qubit_default() : DrbDesign::two_qubit_default(p_2q);
    if (!p.at("depths").is_null()) {
        d.depths = get<std::vector<size_t>>(p, "depths");
    }
    d.circuits_per_depth = get<size_t>(p, "circuits_per_depth");
    d.shots_per_circuit = get<size_t>(p, "shots");
    try {
        d.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    return d;
}

void cmd_drb(const Params &p, std::ostream &out) {
    const fs::path dir = get<std::string>(p, "out");
    const auto seed = get<uint64_t>(p, "seed");
    const NoiseModel noise = load_noise(p.at("noise"));
    const auto resamples = get<size_t>(p, "resamples");
    const std::string mode = get<std::string>(p, "mode");

    if (mode == "1q") {
        const auto width = get<uint32_t>(p, "width");
        if (width < 1) {
            throw UsageError("parameter 'width' must be >= 1");
        }
        DrbDesign design = design_from(p, 1, 0);
        std::ostringstream csv;
        csv << "qubit,r_1q,bootstrap_std\n";
        for (uint32_t q = 0; q < width; q++) {
            DrbDataset data = run_drb(design, noise.remapped({q}), derive_seed(seed, "drb-1q", q));
            FitResult fit = fit_dataset(data);
            BootstrapResult boot = bootstrap_fit(data, fit, resamples, derive_seed(seed, "drb-1q-bootstrap", q));
            write_file(dir / ("drb_q" + std::to_string(q) + ".json"), drb_dataset_to_json(data));
            csv << q << "," << format_double(fit.error_rate) << "," << format_double(boot.std) << "\n";
        }
        write_file(dir / "drb_1q.csv", csv.str());
        out << "wrote " << (dir / "drb_1q.csv").string() << " (" << width << " qubits)\n";
        return;
    }
    if (mode != "2q") {
        throw UsageError("parameter 'mode' must be \"1q\" or \"2q\"");
    }
    const auto pairs = resolve_pairs(p);
    const DrbDesign low_design = design_from(p, 2, get<double>(p, "p_2q_low"));
    const DrbDesign high_design = design_from(p, 2, get<double>(p, "p_2q_high"));
    std::ostringstream csv;
    csv << "pair_i,pair_j,r_2q,bootstrap_std,ion_distance\n";
    std::vector<double> distance;
    std::vector<double> rates;
    for (const auto &[i, j] : pairs) {
        const uint64_t key = (uint64_t{i} << 32) | j;
        const NoiseModel local = noise.remapped({i, j});
        DrbDataset low = run_drb(low_design, local, derive_seed(seed, "drb-low", key));
        DrbDataset high = run_drb(high_design, local, derive_seed(seed, "drb-high", key));
        FitResult low_fit = fit_dataset(low);
        FitResult high_fit = fit_dataset(high);
        RateExtraction rates_ij = extract_rates(low_fit.error_rate, high_fit.error_rate);
        BootstrapResult boot =
            bootstrap_two_qubit_rate(low, low_fit, high, high_fit, resamples, derive_seed(seed, "drb-bootstrap", key));
        std::string stem = "drb_" + std::to_string(i) + "_" + std::to_string(j);
        write_file(dir / (stem + "_low.json"), drb_dataset_to_json(low));
        write_file(dir / (stem + "_high.json"), drb_dataset_to_json(high));
        csv << i << "," << j << "," << format_double(rates_ij.r_2q) << "," << format_double(boot.std) << ","
            << (j - i) << "\n";
        if (rates_ij.out_of_range) {
            out << "warning: pair (" << i << ", " << j << ") extraction out of range (kept)\n";
        }
        distance.push_back(j - i);
        rates.push_back(rates_ij.r_2q);
    }
    write_file(dir / "drb_rates.csv", csv.str());
    out << "wrote " << (dir / "drb_rates.csv").string() << " (" << pairs.size() << " pairs)\n";
    std::vector<double> sorted = rates;
    std::sort(sorted.begin(), sorted.end());
    out << "median r_2q: " << format_double(sorted[sorted.size() / 2]) << "\n";
    std::set<double> distinct(distance.begin(), distance.end());
    if (rates.size() >= 3 && distinct.size() > 1) {
        LinearFit fit = linear_regression_with_ci(distance, rates);
        out << "r_2q vs ion distance: slope " << format_double(fit.slope) << " +- "
            << format_double(2 * fit.slope_stderr) << " (2 sigma)"
            << (fit.no_correlation() ? ", no significant correlation" : "") << "\n";
    }
}

// bench -------------------------------------------------------------------

void cmd_bench(const Params &p, std::ostream &out, std::ostream &err) {
    const fs::path dir = get<std::string>(p, "out");
    const auto seed = get<uint64_t>(p, "seed");
    const NoiseModel noise = load_noise(p.at("noise"));
    std::optional<NoiseModel> predict;
    if (!p.at("predict_noise").is_null()) {
        predict = load_noise(p.at("predict_noise"));
    }
    const auto n_variants = get<size_t>(p, "variants");
    const auto shots = get<uint64_t>(p, "shots");
    const auto physical_width = get<size_t>(p, "physical_width");
    const auto t_start = get<size_t>(p, "t_start");
    const auto max_qubits = get<size_t>(p, "max_qubits");
    if (n_variants < 1 || shots < 1) {
        throw UsageError("parameters 'variants' and 'shots' must be >= 1");
    }
    if (t_start < 2) {
        throw UsageError("parameter 't_start' must be >= 2");
    }

    std::vector<Params> specs;
    if (p.at("instances").is_array() && !p.at("instances").empty()) {
        specs = p.at("instances").get<std::vector<Params>>();
    } else {
        const Params &suite = p.at("suite");
        specs = default_suite(get<std::vector<std::string>>(suite, "families"), get<size_t>(suite, "min_width"),
                              get<size_t>(suite, "max_width"), seed);
    }

    std::vector<BenchmarkRecord> records;
    for (size_t idx = 0; idx < specs.size(); idx++) {
        ApplicationInstance inst = make_instance(specs[idx]);
        if (inst.reference.width() > max_qubits) {
            err << "warning: skipping " << inst.name << ": width " << inst.reference.width()
                << " exceeds the simulator limit " << max_qubits << "\n";
            continue;
        }
        VariantSet set = generate_variants(inst.reference, n_variants,
                                           std::max(physical_width, inst.reference.width()),
                                           derive_seed(seed, "bench-variants", idx));
        auto simulate = [&](const NoiseModel &model, std::string_view purpose) {
            std::vector<Histogram> hists;
            for (size_t v = 0; v < set.variants.size(); v++) {
                const Variant &var = set.variants[v];
                hists.push_back(run_shots(to_logical(var), model.remapped(var.qubit_map), shots,
                                          derive_seed(seed, purpose, idx * 4096 + v), {max_qubits, {}}));
            }
            return hists;
        };
        std::vector<Histogram> hists = simulate(noise, "bench-shots");
        Distribution simple = simple_aggregate(hists);
        Distribution voted = plurality_vote(hists, t_start);
        BenchmarkRecord r;
        r.family = std::string(family_name(inst.family));
        ReferenceDims dims = reference_dims(inst.reference);
        r.w_c = dims.width;
        r.d_c = dims.two_qubit_gates;
        r.compiled_2q = two_qubit_gate_count(set.variants.front().circuit);
        r.f_simple = hellinger_fidelity(simple, inst.ideal);
        r.f_voted = hellinger_fidelity(voted, inst.ideal);
        if (predict) {
            r.f_predicted = hellinger_fidelity(simple_aggregate(simulate(*predict, "bench-predict")), inst.ideal);
        }
        records.push_back(r);

        std::string stem = sanitize(std::to_string(idx) + "_" + inst.name);
        Histogram total{inst.reference.width(), {}};
        for (const auto &h : hists) {
            for (const auto &[b, c] : h.counts) {
                total.add(b, c);
            }
        }
        write_file(dir / "histograms" / (stem + ".json"), histogram_to_json(total));
        write_file(dir / "distributions" / (stem + "_voted.json"), distribution_to_json(voted));
        out << inst.name << ": w_c=" << r.w_c << " d_c=" << r.d_c << " compiled_2q=" << r.compiled_2q
            << " f_simple=" << format_double(r.f_simple) << " f_voted=" << format_double(r.f_voted) << "\n";
    }
    write_file(dir / "records.csv", records_to_csv(records));
    out << "wrote " << (dir / "records.csv").string() << " (" << records.size() << " records)\n";
}

// score -------------------------------------------------------------------

void cmd_score(const Params &p, std::ostream &out) {
    const fs::path dir = get<std::string>(p, "out");
    if (p.at("records").is_null()) {
        throw UsageError("missing parameter 'records'");
    }
    std::vector<BenchmarkRecord> records = records_from_csv(read_file(get<std::string>(p, "records")));
    if (records.empty()) {
        throw UsageError("records file has no rows");
    }
    for (bool voted : {false, true}) {
        AqResult aq = aq_score_detailed(records, voted);
        out << "#AQ (" << (voted ? "voted" : "simple") << "): " << aq.score << "\n";
        if (!aq.missing.empty()) {
            out << aq.coverage_warning() << "\n";
        }
    }
    size_t max_w = 0;
    size_t max_d = 0;
    for (const auto &r : records) {
        max_w = std::max(max_w, r.w_c);
        max_d = std::max({max_d, r.compiled_2q, r.d_c});
    }
    auto edges = [&](const char *key, size_t max_value) {
        return p.at(key).is_null() ? power_of_two_edges(max_value) : get<std::vector<size_t>>(p, key);
    };
    std::vector<size_t> we = edges("width_edges", max_w);
    std::vector<size_t> de = edges("depth_edges", max_d);
    const std::string agg_name = get<std::string>(p, "aggregate");
    if (agg_name != "mean" && agg_name != "min") {
        throw UsageError("parameter 'aggregate' must be \"mean\" or \"min\"");
    }
    const Aggregate agg = agg_name == "mean" ? Aggregate::Mean : Aggregate::Min;
    VolumetricTable simple = volumetric_table(records, we, de, agg, FidelityKind::Simple);
    VolumetricTable voted = volumetric_table(records, we, de, agg, FidelityKind::Voted);
    write_file(dir / "volumetric_simple.csv", simple.to_csv());
    write_file(dir / "volumetric_voted.csv", voted.to_csv());
    bool any_predicted = std::any_of(records.begin(), records.end(), [](const auto &r) { return r.f_predicted; });
    if (any_predicted) {
        VolumetricTable predicted = volumetric_table(records, we, de, agg, FidelityKind::Predicted);
        write_file(dir / "volumetric_predicted_minus_simple.csv", volumetric_difference(predicted, simple).to_csv());
    }
    try {
        DecaySlope slope = decay_slope(records);
        out << "fidelity decay per compiled 2Q gate (simple): " << format_double(slope.rate) << "\n";
        for (const auto &w : slope.warnings) {
            out << "warning: " << w << "\n";
        }
    } catch (const std::invalid_argument &e) {
        out << "fidelity decay slope unavailable: " << e.what() << "\n";
    }
}

// vote --------------------------------------------------------------------

void cmd_vote(const Params &p, std::ostream &out) {
    const fs::path dir = get<std::string>(p, "out");
    const auto paths = get<std::vector<std::string>>(p, "histograms");
    if (paths.empty()) {
        throw UsageError("parameter 'histograms' lists no files");
    }
    std::vector<std::vector<uint32_t>> maps;
    if (!p.at("variant_maps").is_null()) {
        Params doc;
        try {
            doc = Params::parse(read_file(get<std::string>(p, "variant_maps")));
            maps = doc.at("variant_maps").get<std::vector<std::vector<uint32_t>>>();
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(std::string("variant map manifest: ") + e.what());
        }
        if (maps.size() != paths.size()) {
            throw UsageError("variant map manifest lists " + std::to_string(maps.size()) + " maps for " +
                             std::to_string(paths.size()) + " histograms");
        }
    }
    std::vector<Histogram> hists;
    for (size_t k = 0; k < paths.size(); k++) {
        Histogram h = histogram_from_json(read_file(paths[k]));
        hists.push_back(maps.empty() ? h : to_logical(h, maps[k]));
    }
    const std::string method = get<std::string>(p, "method");
    Distribution d;
    if (method == "simple") {
        d = simple_aggregate(hists);
    } else if (method == "vote") {
        const auto t_start = get<size_t>(p, "t_start");
        if (t_start < 2) {
            throw UsageError("parameter 't_start' must be >= 2");
        }
        VoteOutcome v = plurality_vote_detailed(hists, t_start);
        d = v.distribution;
        out << (v.fell_back ? "no bitstring reached threshold 2; used simple aggregation\n"
                            : "voted at threshold " + std::to_string(v.threshold) + "\n");
    } else {
        throw UsageError("parameter 'method' must be \"simple\" or \"vote\"");
    }
    write_file(dir / "distribution.json", distribution_to_json(d));
    out << "wrote " << (dir / "distribution.json").string() << "\n";
}

// timing ------------------------------------------------------------------

void cmd_timing(const Params &p, std::ostream &out) {
    const fs::path dir = get<std::string>(p, "out");
    const TimingTable timing = load_timing(p.at("timing"));
    const auto shots = get<uint64_t>(p, "shots");
    Circuit circuit;
    if (!p.at("circuit").is_null()) {
        circuit = circuit_from_json(read_file(get<std::string>(p, "circuit")));
    } else if (!p.at("instance").is_null()) {
        circuit = make_instance(p.at("instance")).reference;
    } else {
        throw UsageError("timing needs parameter 'circuit' or 'instance'");
    }
    if (!is_native(circuit)) {
        circuit = decompose_to_native(circuit);
    }
    ExecutionEstimate est = estimate_execution(circuit, timing, shots);
    Params doc{{"shots", shots},
               {"gate_us_per_shot", est.gate_us_per_shot},
               {"gate_us", est.gate_us},
               {"total_us", est.total_us},
               {"gate_time_fraction", est.gate_time_fraction}};
    write_file(dir / "timing.json", doc.dump(2) + "\n");
    out << "total " << format_double(est.total_us / 1e6) << " s, gate time fraction "
        << format_double(est.gate_time_fraction) << "\n";
}

}  // namespace

Params default_params(const std::string &command) {
    Params p = common_defaults();
    if (command == "drb") {
        p.update({{"mode", "2q"},
                  {"width", 2},
                  {"pairs", Params::array({Params::array({0, 1})})},
                  {"depths", nullptr},
                  {"circuits_per_depth", 4},
                  {"shots", 100},
                  {"p_2q_low", 0.25},
                  {"p_2q_high", 0.75},
                  {"resamples", DEFAULT_BOOTSTRAP_RESAMPLES}});
    } else if (command == "bench") {
        p.update({{"instances", Params::array()},
                  {"suite", {{"families", {"qft", "qpe", "hamsim"}}, {"min_width", 4}, {"max_width", 8}}},
                  {"variants", DEFAULT_NUM_VARIANTS},
                  {"shots", 100},
                  {"physical_width", 30},
                  {"t_start", DEFAULT_VOTE_THRESHOLD},
                  {"max_qubits", 22},
                  {"predict_noise", nullptr}});
    } else if (command == "score") {
        p.update({{"records", nullptr}, {"width_edges", nullptr}, {"depth_edges", nullptr}, {"aggregate", "mean"}});
    } else if (command == "vote") {
        p.update({{"histograms", Params::array()}, {"variant_maps", nullptr}, {"method", "vote"},
                  {"t_start", DEFAULT_VOTE_THRESHOLD}});
    } else if (command == "timing") {
        p.update({{"circuit", nullptr}, {"instance", nullptr}, {"timing", nullptr}, {"shots", 100}});
    } else {
        throw UsageError("unknown command '" + command + "'");
    }
    return p;
}

Params resolve_params(const std::string &command, const std::optional<std::string> &config_text,
                      const std::function<std::optional<std::string>(const std::string &)> &env, const Params &flags) {
    Params p = default_params(command);
    auto overlay = [&](const Params &layer, const char *source) {
        for (const auto &[key, value] : layer.items()) {
            if (!p.contains(key)) {
                throw UsageError(std::string(source) + ": unknown parameter '" + key + "' for command " + command);
            }
            p[key] = value;
        }
    };
    if (config_text) {
        Params doc;
        try {
            doc = Params::parse(*config_text);
        } catch (const nlohmann::json::parse_error &e) {
            auto [line, col] = line_column_at(*config_text, e.byte > 0 ? e.byte - 1 : 0);
            throw ParseError(std::string("config: ") + e.what(), line, col);
        }
        if (!doc.is_object()) {
            throw UsageError("config: expected a JSON object");
        }
        if (doc.contains("command") && doc.contains("params")) {
            if (doc.at("command") != command) {
                throw UsageError("config: manifest is for command " + doc.at("command").dump());
            }
            doc = doc.at("params");
        }
        overlay(doc, "config");
    }
    Params from_env = Params::object();
    for (const auto &[key, value] : p.items()) {
        std::string name = ENV_PREFIX;
        for (char c : key) {
            name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        if (auto v = env(name)) {
            try {
                from_env[key] = Params::parse(*v);
            } catch (const nlohmann::json::parse_error &) {
                from_env[key] = *v;
            }
        }
    }
    overlay(from_env, "environment");
    overlay(flags, "flags");
    return p;
}

void run_command(const std::string &command, const Params &params, std::ostream &out, std::ostream &err) {
    const auto workers = get<int>(params, "workers");
    if (workers < 0) {
        throw UsageError("parameter 'workers' must be >= 0");
    }
#ifdef _OPENMP
    if (workers > 0) {
        omp_set_num_threads(workers);
    }
#endif
    const fs::path dir = get<std::string>(params, "out");
    Params resolved = params;
    // Inline file-backed models so the manifest alone reproduces the run.
    if (resolved.contains("noise") && resolved["noise"].is_string() && resolved["noise"] != "median" &&
        resolved["noise"] != "none") {
        resolved["noise"] = Params::parse(noise_model_to_json(load_noise(resolved["noise"])));
    }
    if (resolved.contains("predict_noise") && resolved["predict_noise"].is_string()) {
        resolved["predict_noise"] = Params::parse(noise_model_to_json(load_noise(resolved["predict_noise"])));
    }
    if (resolved.contains("timing") && !resolved["timing"].is_null()) {
        resolved["timing"] = Params::parse(timing_table_to_json(load_timing(resolved["timing"])));
    }
    if (command == "drb") {
        cmd_drb(resolved, out);
    } else if (command == "bench") {
        cmd_bench(resolved, out, err);
    } else if (command == "score") {
        cmd_score(resolved, out);
    } else if (command == "vote") {
        cmd_vote(resolved, out);
    } else if (command == "timing") {
        cmd_timing(resolved, out);
    } else {
        throw UsageError("unknown command '" + command + "'");
    }
    write_manifest(command, resolved, dir);
}

int run_command_safely(const std::string &command, const Params &params, std::ostream &out, std::ostream &err) {
    try {
        run_command(command, params, out, err);
        return 0;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

ApplicationInstance make_instance(const Params &spec) {
    if (!spec.is_object() || !spec.contains("family")) {
        throw UsageError("instance description needs a 'family' field: " + spec.dump());
    }
    const std::string family = get<std::string>(spec, "family");
    try {
        if (family == "qft") {
            return gen_qft(get<size_t>(spec, "width"), spec.value("input", uint64_t{0}), spec.value("round_trip", true));
        }
        if (family == "qpe") {
            return gen_phase_estimation(get<size_t>(spec, "width"), spec.value("phase", 0.0));
        }
        if (family == "hamsim") {
            return gen_hamiltonian_sim(get<size_t>(spec, "width"), spec.value("steps", size_t{3}),
                                       spec.value("coupling", 1.0), spec.value("field", 1.0), spec.value("dt", 0.2));
        }
    } catch (const nlohmann::json::exception &e) {
        throw UsageError(std::string("instance description: ") + e.what());
    }
    if (family == "ingested") {
        std::string name = spec.value("name", std::string("ingested"));
        return ingest_instance(read_file(get<std::string>(spec, "circuit")),
                               read_file(get<std::string>(spec, "distribution")), name);
    }
    throw UsageError("unknown instance family '" + family + "'");
}

std::vector<Params> default_suite(const std::vector<std::string> &families, size_t min_width, size_t max_width,
                                  uint64_t seed) {
    std::vector<Params> out;
    for (const auto &family : families) {
        for (size_t w = min_width; w <= max_width; w++) {
            Rng rng = make_rng(seed, "suite-" + family, w);
            if (family == "qft") {
                out.push_back({{"family", "qft"}, {"width", w}, {"input", uniform_index(rng, uint64_t{1} << w)}});
            } else if (family == "qpe") {
                uint64_t denom = uint64_t{1} << (w - 1);
                double phase = static_cast<double>(uniform_index(rng, denom)) / static_cast<double>(denom);
                out.push_back({{"family", "qpe"}, {"width", w}, {"phase", phase}});
            } else if (family == "hamsim") {
                out.push_back({{"family", "hamsim"},
                               {"width", w},
                               {"steps", w},
                               {"coupling", 1.0},
                               {"field", 0.1},
                               {"dt", 0.2}});
            } else {
                throw UsageError("suite family must be qft, qpe or hamsim, got '" + family + "'");
            }
        }
    }
    return out;
}

}  // namespace ionbench::cli
