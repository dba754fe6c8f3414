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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ionbench/cli/commands.h"
#include "ionbench/oracles/oracles.h"

using ionbench::cli::Params;

namespace {

std::optional<std::string> from_env(const std::string &name) {
    const char *v = std::getenv(name.c_str());
    if (v == nullptr) {
        return std::nullopt;
    }
    return std::string(v);
}

std::optional<std::string> read_config(const std::string &path) {
    if (path.empty()) {
        return std::nullopt;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ionbench::cli::UsageError("cannot read config '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Flags common to every subcommand, collected into a JSON overlay.
struct CommonFlags {
    std::optional<uint64_t> seed;
    std::optional<std::string> noise;
    std::optional<std::string> out;
    std::optional<int> workers;
    std::string config;

    void attach(CLI::App *cmd) {
        cmd->add_option("--seed", seed, "Root random seed");
        cmd->add_option("--noise", noise, "Noise model: median, none, or a JSON file");
        cmd->add_option("--out", out, "Output directory");
        cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
        cmd->add_option("--config", config, "JSON config or manifest from an earlier run");
    }

    Params overlay() const {
        Params p = Params::object();
        if (seed) p["seed"] = *seed;
        if (noise) p["noise"] = *noise;
        if (out) p["out"] = *out;
        if (workers) p["workers"] = *workers;
        return p;
    }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"ionbench: randomized benchmarking, noisy simulation and volumetric scoring"};
    app.require_subcommand(0, 1);
    bool self_check = false;
    app.add_flag("--self-check", self_check, "Run the oracle suite and print a JSON report");

    CommonFlags common;
    std::string pairs;
    std::optional<uint32_t> width;
    std::optional<std::string> mode;
    std::optional<size_t> resamples;
    auto *drb = app.add_subcommand("drb", "Simulate and fit DRB on qubits or pairs");
    common.attach(drb);
    drb->add_option("--pairs", pairs, "\"all\" or JSON list such as [[0,1],[2,5]]");
    drb->add_option("--width", width, "Number of qubits");
    drb->add_option("--mode", mode, "1q or 2q")->check(CLI::IsMember({"1q", "2q"}));
    drb->add_option("--resamples", resamples, "Bootstrap resamples");

    std::optional<uint64_t> shots;
    std::optional<size_t> variants;
    std::optional<size_t> t_start;
    std::optional<std::string> predict_noise;
    auto *bench = app.add_subcommand("bench", "Simulate application instances and write records");
    common.attach(bench);
    bench->add_option("--shots", shots, "Shots per variant");
    bench->add_option("--variants", variants, "Variants per instance");
    bench->add_option("--t-start", t_start, "Starting vote threshold");
    bench->add_option("--predict-noise", predict_noise, "Noise model for predicted fidelities");

    std::string records;
    std::optional<std::string> aggregate;
    auto *score = app.add_subcommand("score", "Compute #AQ and volumetric tables from records");
    common.attach(score);
    score->add_option("records", records, "Records CSV");
    score->add_option("--aggregate", aggregate, "mean or min")->check(CLI::IsMember({"mean", "min"}));

    std::vector<std::string> histograms;
    std::string maps;
    std::optional<std::string> method;
    auto *vote = app.add_subcommand("vote", "Aggregate variant histograms");
    common.attach(vote);
    vote->add_option("histograms", histograms, "Histogram JSON files");
    vote->add_option("--maps", maps, "Manifest JSON with \"variant_maps\"");
    vote->add_option("--method", method, "simple or vote")->check(CLI::IsMember({"simple", "vote"}));
    vote->add_option("--t-start", t_start, "Starting vote threshold");

    std::string circuit;
    std::string timing_file;
    auto *timing = app.add_subcommand("timing", "Estimate execution time of a circuit");
    common.attach(timing);
    timing->add_option("circuit", circuit, "Circuit JSON file");
    timing->add_option("--timing", timing_file, "Timing table JSON");
    timing->add_option("--shots", shots, "Shots");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (self_check) {
        auto checks = ionbench::oracles::self_check();
        std::string report = ionbench::oracles::self_check_report(checks);
        std::cout << report;
        for (const auto &c : checks) {
            if (!c.passed) {
                return 1;
            }
        }
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 2;
    }

    CLI::App *cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    Params flags = common.overlay();
    try {
        if (name == "drb") {
            if (!pairs.empty()) {
                flags["pairs"] = pairs == "all" ? Params("all") : Params::parse(pairs);
            }
            if (width) flags["width"] = *width;
            if (mode) flags["mode"] = *mode;
            if (resamples) flags["resamples"] = *resamples;
        } else if (name == "bench") {
            if (shots) flags["shots"] = *shots;
            if (variants) flags["variants"] = *variants;
            if (t_start) flags["t_start"] = *t_start;
            if (predict_noise) flags["predict_noise"] = *predict_noise;
        } else if (name == "score") {
            if (!records.empty()) flags["records"] = records;
            if (aggregate) flags["aggregate"] = *aggregate;
        } else if (name == "vote") {
            if (!histograms.empty()) flags["histograms"] = histograms;
            if (!maps.empty()) flags["variant_maps"] = maps;
            if (method) flags["method"] = *method;
            if (t_start) flags["t_start"] = *t_start;
        } else if (name == "timing") {
            if (!circuit.empty()) flags["circuit"] = circuit;
            if (!timing_file.empty()) flags["timing"] = timing_file;
            if (shots) flags["shots"] = *shots;
        }
        Params params = ionbench::cli::resolve_params(name, read_config(common.config), from_env, flags);
        return ionbench::cli::run_command_safely(name, params, std::cout, std::cerr);
    } catch (const ionbench::cli::UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
