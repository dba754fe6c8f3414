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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Pass criterion numbers as arguments to run a subset.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "ionbench/analysis/records.h"
#include "ionbench/analysis/scoring.h"
#include "ionbench/appsuite/appsuite.h"
#include "ionbench/circuit/circuit_json.h"
#include "ionbench/cli/commands.h"
#include "ionbench/drb/drb.h"
#include "ionbench/drb/fit.h"
#include "ionbench/mitigation/mitigation.h"
#include "ionbench/oracles/oracles.h"
#include "ionbench/simulator/density.h"
#include "ionbench/simulator/trajectory.h"
#include "ionbench/util/rng.h"

using namespace ionbench;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool passed;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(4);
    s << x;
    return s.str();
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir(const std::string &name) {
    fs::path dir = fs::temp_directory_path() / ("ionbench-acceptance-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

auto no_env = [](const std::string &) -> std::optional<std::string> { return std::nullopt; };

/// Runs a CLI command in-process; returns its stdout.
std::string run_cli(const std::string &command, const cli::Params &flags) {
    cli::Params p = cli::resolve_params(command, std::nullopt, no_env, flags);
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run_command_safely(command, p, out, err);
    if (code != 0) {
        throw std::runtime_error(command + " exited with " + std::to_string(code) + ": " + err.str());
    }
    return out.str();
}

// 1: closed-loop DRB --------------------------------------------------------

Verdict closed_loop_drb() {
    auto start = Clock::now();
    const NoiseModel noise = NoiseModel::median();
    int within = 0;
    std::string rates;
    for (uint64_t seed = 1; seed <= 10; seed++) {
        DrbDataset low = run_drb(DrbDesign::two_qubit_default(0.25), noise, derive_seed(seed, "drb-low"));
        DrbDataset high = run_drb(DrbDesign::two_qubit_default(0.75), noise, derive_seed(seed, "drb-high"));
        RateExtraction r = extract_rates(fit_dataset(low).error_rate, fit_dataset(high).error_rate);
        within += std::abs(r.r_2q - MEDIAN_EPS_2Q) / MEDIAN_EPS_2Q < 0.4;
        rates += " " + fmt(r.r_2q * 1e4);
    }
    double elapsed = seconds_since(start);
    return {within >= 9 && elapsed < 300, std::to_string(within) + "/10 seeds within 40% of 46.4e-4; r_2q x1e4:" +
                                              rates + "; " + fmt(elapsed) + " s"};
}

// 2: deep-DRB truncation ----------------------------------------------------

Verdict deep_truncation() {
    const NoiseModel noise = NoiseModel::median();
    const size_t shots = 1000;
    auto sweep = [&](double p_2q, double &worst) {
        int ok = 0;
        worst = 0;
        for (uint64_t seed = 1; seed <= 10; seed++) {
            DrbDataset deep = run_drb(DrbDesign::two_qubit_deep(p_2q, shots), noise, derive_seed(seed, "deep"));
            double rel = truncation_comparison(deep);
            worst = std::max(worst, rel);
            ok += rel < 0.1;
        }
        return ok;
    };
    double worst_high = 0;
    double worst_low = 0;
    int high = sweep(0.75, worst_high);
    int low = sweep(0.25, worst_low);
    std::cout << "  info: p_2q=0.25 deep design: " << low << "/10 seeds below 10% (max " << fmt(worst_low) << ")\n";
    return {high == 10, "p_2q=0.75, N_c=4, N_s=1000: " + std::to_string(high) + "/10 seeds below 10% (max " +
                            fmt(worst_high) + ")"};
}

// 3: trajectory / channel equivalence ---------------------------------------

Circuit random_native_circuit(size_t width, size_t n_gates, Rng &rng) {
    Circuit c(width);
    for (size_t i = 0; i < n_gates; i++) {
        auto a = static_cast<uint32_t>(uniform_index(rng, width));
        double t = (uniform01(rng) - 0.5) * 2 * M_PI;
        size_t kind = uniform_index(rng, width > 1 ? 5 : 3);
        auto b = static_cast<uint32_t>(1 - a);
        switch (kind) {
            case 0: c.append(Gate::x90(a)); break;
            case 1: c.append(Gate::y90(a)); break;
            case 2: c.append(Gate::rz(a, t)); break;
            case 3: c.append(Gate::xx(a, b, t)); break;
            default: c.append(Gate::zz(a, b, t)); break;
        }
    }
    return c;
}

Verdict trajectory_equivalence() {
    Rng rng = make_rng(2024, "acceptance-channel");
    const uint64_t shots = 100000;
    int good = 0;
    double worst = 0;
    for (int k = 0; k < 50; k++) {
        size_t width = 1 + uniform_index(rng, 2);
        Circuit c = random_native_circuit(width, 4 + uniform_index(rng, 12), rng);
        NoiseModel noise = NoiseModel::uniform(0.3 * uniform01(rng), 0.3 * uniform01(rng), 0.3 * uniform01(rng));
        Distribution exact = exact_channel(c, noise);
        Distribution oracle = oracles::density_channel_distribution(c, noise);
        Histogram h = run_shots(c, noise, shots, derive_seed(2024, "acceptance-shots", k));
        bool ok = true;
        for (Bits b = 0; b < (Bits{1} << width); b++) {
            double p = exact.prob(b);
            ok = ok && std::abs(p - oracle.prob(b)) < 1e-12;
            double freq = static_cast<double>(h.counts.contains(b) ? h.counts.at(b) : 0) / static_cast<double>(shots);
            double se = std::sqrt(p * (1 - p) / static_cast<double>(shots));
            double z = se > 0 ? std::abs(freq - p) / se : (freq == p ? 0 : INFINITY);
            worst = std::max(worst, z);
            ok = ok && z <= 5;
        }
        good += ok;
    }
    return {good == 50, std::to_string(good) + "/50 circuits within 5 standard errors (largest deviation " +
                            fmt(worst) + " SE); exact channel equals density oracle"};
}

// 4: plurality vote exactness ------------------------------------------------

Verdict vote_exactness() {
    Rng rng = make_rng(77, "acceptance-vote");
    const uint64_t rounds = 1000000;
    int good = 0;
    double worst = 0;
    for (int k = 0; k < 200; k++) {
        size_t n_v = 2 + uniform_index(rng, 7);
        size_t t = std::max<size_t>(2, (n_v + 1) / 2 + uniform_index(rng, n_v - (n_v + 1) / 2 + 1));
        std::vector<Histogram> hs;
        for (size_t v = 0; v < n_v; v++) {
            Histogram h{3, {}};
            // Bitstring 0 is shared so voting succeeds at the starting threshold.
            h.add(0, 1 + uniform_index(rng, 60));
            size_t others = uniform_index(rng, 4);
            for (size_t o = 0; o < others; o++) {
                h.add(1 + uniform_index(rng, 7), 1 + uniform_index(rng, 40));
            }
            hs.push_back(h);
        }
        VoteOutcome exact = plurality_vote_detailed(hs, t);
        Distribution mc = plurality_vote_mc(hs, t, rounds, derive_seed(77, "acceptance-vote-mc", k));
        double tv = total_variation(exact.distribution, mc);
        worst = std::max(worst, tv);
        good += tv <= 0.01 && exact.threshold == t;
    }
    Rng frng = make_rng(78, "acceptance-pb");
    double dp_err = 0;
    for (size_t n = 0; n <= oracles::SUBSET_ORACLE_MAX; n++) {
        for (int trial = 0; trial < 20; trial++) {
            std::vector<double> f(n);
            for (double &x : f) {
                x = uniform_index(frng, 5) == 0 ? static_cast<double>(uniform_index(frng, 2)) : uniform01(frng);
            }
            std::vector<double> pmf = poisson_binomial_distribution(f);
            for (size_t m = 0; m <= n; m++) {
                dp_err = std::max(dp_err, std::abs(pmf[m] - oracles::subset_enumeration_pmf(f, m)));
            }
        }
    }
    return {good == 200 && dp_err <= 1e-12,
            std::to_string(good) + "/200 instances within 0.01 TV of 1e6-round Monte Carlo (max " + fmt(worst) +
                "); DP vs subset enumeration max error " + fmt(dp_err)};
}

// 5 and 6: application suite -------------------------------------------------

struct SuiteRun {
    std::vector<BenchmarkRecord> records;
    std::vector<double> ideal_peak;
    bool done = false;
};

SuiteRun &suite_run() {
    static SuiteRun run;
    if (run.done) {
        return run;
    }
    fs::path dir = scratch_dir("suite");
    cli::Params suite{{"families", {"qft", "qpe", "hamsim"}}, {"min_width", 4}, {"max_width", 10}};
    run_cli("bench", {{"out", dir.string()}, {"seed", 5}, {"suite", suite}, {"variants", 25}, {"shots", 100}});
    run.records = records_from_csv(slurp(dir / "records.csv"));
    for (const auto &spec : cli::default_suite({"qft", "qpe", "hamsim"}, 4, 10, 5)) {
        double peak = 0;
        for (const auto &[b, p] : cli::make_instance(spec).ideal.probs) {
            peak = std::max(peak, p);
        }
        run.ideal_peak.push_back(peak);
    }
    run.done = true;
    return run;
}

Verdict application_decay() {
    const SuiteRun &run = suite_run();
    DecaySlope slope = decay_slope(run.records, FidelityKind::Simple);
    double ratio = slope.rate / MEDIAN_EPS_2Q;
    bool slope_ok = ratio >= 0.8 && ratio <= 1.3;

    fs::path dir = scratch_dir("aq29");
    std::string out = run_cli("score", {{"out", dir.string()},
                                        {"records", std::string(IONBENCH_FIXTURE_DIR) + "/aq29_records.csv"}});
    bool aq_ok = out.find("#AQ (voted): 29\n") != std::string::npos;
    for (const std::string family : {"qft", "qpe", "hamsim"}) {
        std::vector<BenchmarkRecord> subset;
        std::copy_if(run.records.begin(), run.records.end(), std::back_inserter(subset),
                     [&](const BenchmarkRecord &r) { return r.family == family; });
        std::cout << "  info: " << family << " alone: " << fmt(decay_slope(subset).rate / MEDIAN_EPS_2Q)
                  << " x 46.4e-4\n";
    }
    return {slope_ok && aq_ok, std::to_string(slope.used) + " instances, -ln F per compiled 2Q gate " +
                                   fmt(slope.rate * 1e4) + "e-4 = " + fmt(ratio) +
                                   " x 46.4e-4 (band 0.8-1.3); AQ fixture voted score " + (aq_ok ? "29" : "not 29")};
}

Verdict mitigation_gain() {
    const SuiteRun &run = suite_run();
    int eligible = 0;
    int gained = 0;
    for (size_t i = 0; i < run.records.size(); i++) {
        if (run.ideal_peak[i] < 0.5) {
            continue;
        }
        eligible++;
        gained += run.records[i].f_voted >= run.records[i].f_simple;
    }
    bool ok = eligible > 0 && gained >= 0.9 * eligible;
    return {ok, std::to_string(gained) + "/" + std::to_string(eligible) +
                    " concentrated-output instances with voted >= simple fidelity"};
}

// 7: #AQ scorer ---------------------------------------------------------------

BenchmarkRecord rec(const std::string &family, size_t w, size_t d, double f) {
    return BenchmarkRecord{family, w, d, d, f, f, std::nullopt};
}

Verdict aq_scorer() {
    std::vector<std::string> failures;
    std::vector<BenchmarkRecord> passing;
    for (size_t w = 2; w <= 10; w++) {
        passing.push_back(rec("qft", w, w * (w - 1) / 2, 0.9));
        passing.push_back(rec("hamsim", w, 2 * (w - 1), 0.7));
    }
    if (aq_score(passing, false) != 10) failures.push_back("all-passing fixture");
    auto failing = passing;
    failing.push_back(rec("ae", 5, 30, 0.2));
    if (aq_score(failing, false) != 5) failures.push_back("w_c=5/d_c=30 fixture");
    auto at_threshold = passing;
    at_threshold.push_back(rec("qpe", 4, 10, AQ_THRESHOLD));
    if (aq_score(at_threshold, false) != 3) failures.push_back("threshold fixture");
    auto voted_only = passing;
    voted_only.push_back(BenchmarkRecord{"vqe", 3, 5, 5, 0.3, 0.5, std::nullopt});
    if (aq_score(voted_only, false) != 2 || aq_score(voted_only, true) != 10) failures.push_back("voted fixture");

    Rng rng = make_rng(99, "acceptance-aq");
    int violations = 0;
    for (int trial = 0; trial < 1000; trial++) {
        std::vector<BenchmarkRecord> records;
        size_t n = 1 + uniform_index(rng, 40);
        for (size_t i = 0; i < n; i++) {
            size_t w = 1 + uniform_index(rng, 15);
            records.push_back(rec("f" + std::to_string(uniform_index(rng, 4)), w, uniform_index(rng, w * w + 30),
                                  uniform01(rng)));
        }
        size_t base = aq_score(records, false);
        auto added = records;
        size_t w = 1 + uniform_index(rng, 15);
        added.push_back(rec("f0", w, uniform_index(rng, 250), AQ_THRESHOLD + 1e-9 + (1 - AQ_THRESHOLD) * uniform01(rng) * 0.99));
        auto raised = records;
        auto &r = raised[uniform_index(rng, raised.size())];
        r.f_simple = std::min(1.0, r.f_simple + uniform01(rng));
        violations += aq_score(added, false) < base;
        violations += aq_score(raised, false) < base;
    }
    std::string detail = failures.empty() ? "fixtures exact" : "fixture mismatch:";
    for (const auto &f : failures) detail += " " + f;
    detail += "; " + std::to_string(violations) + " monotonicity violations over 1000 random record sets";
    return {failures.empty() && violations == 0, detail};
}

// 8: fit exactness -------------------------------------------------------------

Verdict fit_exactness() {
    double worst = 0;
    std::vector<std::vector<double>> params{{0.5, 0.5, 0.99}, {0.25, 0.7, 0.995}, {0.1, 0.85, 0.9},
                                            {0.6, 0.3, 0.9999}, {0.0, 1.0, 0.95}};
    std::vector<double> depths{1, 10, 100, 1000};
    for (const auto &abp : params) {
        std::vector<double> s;
        for (double d : depths) {
            s.push_back(abp[0] + abp[1] * std::pow(abp[2], d));
        }
        FitResult fit = fit_decay(depths, s);
        worst = std::max({worst, std::abs(fit.a - abp[0]), std::abs(fit.b - abp[1]), std::abs(fit.p - abp[2])});
        FitResult fixed = fit_decay(depths, s, abp[0]);
        worst = std::max({worst, std::abs(fixed.b - abp[1]), std::abs(fixed.p - abp[2])});
    }
    double min_p = 1;
    for (uint64_t seed = 1; seed <= 5; seed++) {
        min_p = std::min(min_p, fit_dataset(run_drb(DrbDesign::one_qubit_default(), NoiseModel{}, seed)).p);
        min_p = std::min(min_p, fit_dataset(run_drb(DrbDesign::two_qubit_default(0.5), NoiseModel{}, seed)).p);
    }
    return {worst <= 1e-6 && min_p >= 1 - 1e-6,
            "max parameter error " + fmt(worst) + "; noiseless DRB min p = " + fmt(min_p)};
}

// 9: performance and determinism ---------------------------------------------

int run_binary(const std::string &args) {
    std::string cmd = std::string(IONBENCH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict performance_and_determinism() {
    Rng rng = make_rng(9, "acceptance-wide");
    const size_t width = 20;
    Circuit c(width);
    for (int k = 0; k < 200; k++) {
        auto a = static_cast<uint32_t>(uniform_index(rng, width));
        auto b = static_cast<uint32_t>((a + 1 + uniform_index(rng, width - 1)) % width);
        c.append(uniform_index(rng, 2) ? Gate::x90(a) : Gate::y90(a));
        c.append(Gate::rz(b, uniform01(rng) * 6));
        c.append(uniform_index(rng, 2) ? Gate::zz(a, b, uniform01(rng)) : Gate::xx(a, b, uniform01(rng)));
    }
    const NoiseModel noise = NoiseModel::median();
    auto start = Clock::now();
    run_shots(c, noise, 1, 1);
    double one = seconds_since(start);
    start = Clock::now();
    Histogram h = run_shots(c, noise, 100, 2);
    double hundred = seconds_since(start);

    fs::path root = scratch_dir("determinism");
    std::vector<std::string> listings;
    bool all_ran = true;
    for (int workers : {1, 4, 8}) {
        fs::path out = root / ("w" + std::to_string(workers));
        std::string config = (root / "config.json").string();
        std::ofstream(config) << R"({"command": "bench", "params": {"seed": 11, "variants": 6, "shots": 40,)"
                              << R"( "predict_noise": "median", "suite": {"families": ["qft", "qpe", "hamsim"],)"
                              << R"( "min_width": 3, "max_width": 6}}})";
        all_ran = all_ran && run_binary("bench --config " + config + " --workers " + std::to_string(workers) +
                                        " --out " + out.string()) == 0;
        std::string listing;
        std::vector<fs::path> files;
        for (const auto &e : fs::recursive_directory_iterator(out)) {
            if (e.is_regular_file() && e.path().filename() != "manifest.json") {
                files.push_back(e.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto &f : files) {
            listing += fs::relative(f, out).string() + "\n" + slurp(f);
        }
        listings.push_back(listing);
    }
    bool identical = all_ran && !listings[0].empty() && listings[0] == listings[1] && listings[1] == listings[2];
    bool ok = one <= 2.0 && hundred <= 180.0 && h.shots() == 100 && identical;
    return {ok, "width-20 / 200 2Q gates: 1 shot " + fmt(one) + " s, 100 shots " + fmt(hundred) +
                    " s; CLI outputs at 1/4/8 workers " + (identical ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"closed-loop DRB", closed_loop_drb},
        {"deep-DRB truncation", deep_truncation},
        {"trajectory/channel equivalence", trajectory_equivalence},
        {"plurality vote exactness", vote_exactness},
        {"application decay slope", application_decay},
        {"mitigation gain", mitigation_gain},
        {"#AQ scorer", aq_scorer},
        {"fit exactness", fit_exactness},
        {"performance and determinism", performance_and_determinism},
    };
    std::set<size_t> selected;
    for (int i = 1; i < argc; i++) {
        selected.insert(static_cast<size_t>(std::stoul(argv[i])));
    }
    bool all = true;
    for (size_t k = 0; k < criteria.size(); k++) {
        if (!selected.empty() && !selected.contains(k + 1)) {
            continue;
        }
        auto start = Clock::now();
        Verdict v;
        try {
            v = criteria[k].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        all = all && v.passed;
        std::cout << (v.passed ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << criteria[k].first
                  << "): " << v.detail << " [" << fmt(seconds_since(start)) << " s]" << std::endl;
    }
    return all ? 0 : 1;
}
