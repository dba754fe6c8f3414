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
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <sys/wait.h>

#include "gtest/gtest.h"
#include "ionbench/analysis/records.h"
#include "ionbench/circuit/circuit_json.h"
#include "ionbench/cli/commands.h"
#include "ionbench/simulator/histogram.h"
#include "ionbench/util/errors.h"

using namespace ionbench;
using namespace ionbench::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string &name) {
    fs::path dir = fs::temp_directory_path() / ("ionbench-cli-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path &path, const std::string &text) {
    std::ofstream(path, std::ios::binary) << text;
}

auto no_env = [](const std::string &) -> std::optional<std::string> { return std::nullopt; };

int run(const std::string &command, Params flags, std::string *out_text = nullptr) {
    Params p = resolve_params(command, std::nullopt, no_env, flags);
    std::ostringstream out;
    std::ostringstream err;
    int code = run_command_safely(command, p, out, err);
    if (out_text) {
        *out_text = out.str() + err.str();
    }
    return code;
}

int run_binary(const std::string &args) {
    std::string cmd = std::string(IONBENCH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

size_t count_lines(const std::string &text) {
    return static_cast<size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST(params, layering_precedence) {
    std::map<std::string, std::string> env{{"IONBENCH_SHOTS", "300"}, {"IONBENCH_OUT", "from-env"}};
    auto lookup = [&](const std::string &k) -> std::optional<std::string> {
        auto it = env.find(k);
        return it == env.end() ? std::nullopt : std::optional<std::string>(it->second);
    };
    std::string config = R"({"shots": 200, "variants": 5, "seed": 9})";
    Params p = resolve_params("bench", config, lookup, Params{{"seed", 4}});
    EXPECT_EQ(p["variants"], 5);
    EXPECT_EQ(p["shots"], 300);
    EXPECT_EQ(p["out"], "from-env");
    EXPECT_EQ(p["seed"], 4);
    EXPECT_EQ(p["t_start"], 7);

    std::string manifest = R"({"command": "bench", "params": {"variants": 3}})";
    EXPECT_EQ(resolve_params("bench", manifest, no_env, Params::object())["variants"], 3);
    EXPECT_THROW(resolve_params("score", manifest, no_env, Params::object()), UsageError);
    EXPECT_THROW(resolve_params("bench", R"({"bogus": 1})", no_env, Params::object()), UsageError);
    EXPECT_THROW(resolve_params("bench", "{\n  \"shots\": }", no_env, Params::object()), ParseError);
    EXPECT_THROW(default_params("frobnicate"), UsageError);
}

TEST(drb_command, pair_selection) {
    fs::path dir = scratch_dir("drb");
    std::string text;
    EXPECT_EQ(run("drb", {{"out", dir.string()}, {"pairs", Params::array()}}, &text), 2);
    EXPECT_NE(text.find("pairs"), std::string::npos);
    EXPECT_EQ(run("drb", {{"out", dir.string()}, {"pairs", {{0, 0}}}}), 2);
    EXPECT_EQ(run("drb", {{"out", dir.string()}, {"pairs", {{0, 1}}}, {"resamples", 20}}), 0);
    std::string csv = slurp(dir / "drb_rates.csv");
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "pair_i,pair_j,r_2q,bootstrap_std,ion_distance");
    EXPECT_EQ(count_lines(csv), 2u);
    EXPECT_TRUE(fs::exists(dir / "drb_0_1_low.json"));
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
}

TEST(drb_command, all_pairs_of_eight) {
    fs::path dir = scratch_dir("drb-all");
    Params flags{{"out", dir.string()}, {"pairs", "all"},       {"width", 8},
                 {"depths", {1, 5}},    {"shots", 10},         {"circuits_per_depth", 1},
                 {"resamples", 2}};
    std::string text;
    ASSERT_EQ(run("drb", flags, &text), 0) << text;
    EXPECT_EQ(count_lines(slurp(dir / "drb_rates.csv")), 29u);
    EXPECT_NE(text.find("r_2q vs ion distance"), std::string::npos);
}

TEST(drb_command, one_qubit_mode) {
    fs::path dir = scratch_dir("drb-1q");
    Params flags{{"out", dir.string()}, {"mode", "1q"}, {"width", 2}, {"shots", 50}, {"resamples", 5}};
    ASSERT_EQ(run("drb", flags), 0);
    EXPECT_EQ(count_lines(slurp(dir / "drb_1q.csv")), 3u);
    EXPECT_EQ(run("drb", {{"out", dir.string()}, {"mode", "3q"}}), 2);
}

TEST(bench_command, noiseless_records) {
    fs::path dir = scratch_dir("bench");
    Params flags{{"out", dir.string()},
                 {"noise", "none"},
                 {"variants", 5},
                 {"shots", 100},
                 {"physical_width", 8},
                 {"max_qubits", 4},
                 {"instances", {{{"family", "qft"}, {"width", 3}, {"input", 5}},
                                {{"family", "hamsim"}, {"width", 3}, {"steps", 2}},
                                {{"family", "qft"}, {"width", 5}}}}};
    std::string text;
    ASSERT_EQ(run("bench", flags, &text), 0) << text;
    EXPECT_NE(text.find("skipping"), std::string::npos);
    std::vector<BenchmarkRecord> records = records_from_csv(slurp(dir / "records.csv"));
    ASSERT_EQ(records.size(), 2u);
    EXPECT_NEAR(records[0].f_simple, 1.0, 1e-12);
    EXPECT_NEAR(records[0].f_voted, 1.0, 1e-12);
    EXPECT_GT(records[1].f_simple, 0.97);
    EXPECT_EQ(records[0].d_c, 3u);
    EXPECT_TRUE(fs::exists(dir / "histograms"));
}

TEST(bench_command, manifest_replays_byte_identically) {
    fs::path a = scratch_dir("bench-a");
    fs::path b = scratch_dir("bench-b");
    Params flags{{"out", a.string()},
                 {"variants", 3},
                 {"shots", 50},
                 {"workers", 1},
                 {"predict_noise", "median"},
                 {"suite", {{"families", {"qft", "qpe"}}, {"min_width", 3}, {"max_width", 4}}}};
    ASSERT_EQ(run("bench", flags), 0);
    std::string manifest = slurp(a / "manifest.json");
    EXPECT_EQ(manifest.find("workers"), std::string::npos);
    Params replay = resolve_params("bench", manifest, no_env, {{"out", b.string()}, {"workers", 2}});
    std::ostringstream sink;
    ASSERT_EQ(run_command_safely("bench", replay, sink, sink), 0);
    EXPECT_EQ(slurp(a / "records.csv"), slurp(b / "records.csv"));
    std::vector<BenchmarkRecord> records = records_from_csv(slurp(a / "records.csv"));
    ASSERT_EQ(records.size(), 4u);
    EXPECT_TRUE(records[0].f_predicted.has_value());
}

TEST(score_command, scores_and_row_errors) {
    fs::path dir = scratch_dir("score");
    std::vector<BenchmarkRecord> records;
    for (size_t w = 2; w <= 10; w++) {
        records.push_back({"qft", w, w * (w - 1) / 2, 3 * w, 0.9, 0.95, 0.97});
    }
    records.push_back({"ae", 5, 30, 80, 0.2, 0.2, 0.5});
    spit(dir / "records.csv", records_to_csv(records));
    std::string text;
    ASSERT_EQ(run("score", {{"out", dir.string()}, {"records", (dir / "records.csv").string()}}, &text), 0);
    EXPECT_NE(text.find("#AQ (simple): 5"), std::string::npos) << text;
    EXPECT_NE(text.find("#AQ (voted): 5"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir / "volumetric_simple.csv"));
    EXPECT_TRUE(fs::exists(dir / "volumetric_predicted_minus_simple.csv"));

    spit(dir / "bad.csv", records_to_csv(records) + "qft,3,3\n");
    EXPECT_EQ(run("score", {{"out", dir.string()}, {"records", (dir / "bad.csv").string()}}, &text), 3);
    EXPECT_NE(text.find("12"), std::string::npos) << text;
    EXPECT_EQ(run("score", {{"out", dir.string()}}), 2);
}

TEST(vote_command, maps_and_methods) {
    fs::path dir = scratch_dir("vote");
    std::vector<std::string> paths;
    for (int v = 0; v < 3; v++) {
        // Logical qubit 0 sits on physical qubit 2 - v.
        Histogram h{3, {{Bits{1} << (2 - v), 60}, {0, 40}}};
        paths.push_back((dir / ("h" + std::to_string(v) + ".json")).string());
        spit(paths.back(), histogram_to_json(h));
    }
    spit(dir / "maps.json", R"({"variant_maps": [[2], [1], [0]]})");
    Params flags{{"out", dir.string()},
                 {"histograms", paths},
                 {"variant_maps", (dir / "maps.json").string()},
                 {"t_start", 2}};
    ASSERT_EQ(run("vote", flags), 0);
    Distribution d = distribution_from_json(slurp(dir / "distribution.json"));
    EXPECT_EQ(d.width, 1u);
    EXPECT_NEAR(d.prob(1), 0.648, 1e-12);
    flags["method"] = "simple";
    ASSERT_EQ(run("vote", flags), 0);
    EXPECT_NEAR(distribution_from_json(slurp(dir / "distribution.json")).prob(1), 0.6, 1e-12);
    flags["method"] = "median";
    EXPECT_EQ(run("vote", flags), 2);
}

TEST(timing_command, estimates) {
    fs::path dir = scratch_dir("timing");
    Circuit c(2);
    c.append(Gate::cnot(0, 1));
    spit(dir / "c.json", circuit_to_json(c));
    ASSERT_EQ(run("timing", {{"out", dir.string()}, {"circuit", (dir / "c.json").string()}, {"shots", 1}}), 0);
    Params doc = Params::parse(slurp(dir / "timing.json"));
    EXPECT_GT(doc["gate_us_per_shot"].get<double>(), 900.0);
    EXPECT_EQ(run("timing", {{"out", dir.string()}}), 2);
}

TEST(binary, exit_codes) {
    fs::path dir = scratch_dir("binary");
    EXPECT_EQ(run_binary("--help"), 0);
    EXPECT_EQ(run_binary("frobnicate"), 2);
    EXPECT_EQ(run_binary("drb --pairs '[]' --out " + dir.string()), 2);
    spit(dir / "bad.csv", "family,w_c,d_c,compiled_2q,f_simple,f_voted,f_predicted\nqft,x,1,1,1,1,\n");
    EXPECT_EQ(run_binary("score " + (dir / "bad.csv").string() + " --out " + dir.string()), 3);
    EXPECT_EQ(run_binary("timing " + (dir / "missing.json").string() + " --out " + dir.string()), 2);
    EXPECT_EQ(run_binary("--self-check"), 0);
}
