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

#include <cmath>

#include "gtest/gtest.h"
#include "ionbench/analysis/fidelity.h"
#include "ionbench/analysis/records.h"
#include "ionbench/analysis/regression.h"
#include "ionbench/analysis/scoring.h"
#include "ionbench/analysis/timing.h"
#include "ionbench/util/errors.h"
#include "ionbench/util/rng.h"

using namespace ionbench;

namespace {

BenchmarkRecord rec(const std::string &family, size_t w, size_t d, double f) {
    return BenchmarkRecord{family, w, d, d, f, f, std::nullopt};
}

std::vector<BenchmarkRecord> passing_suite(size_t max_width) {
    std::vector<BenchmarkRecord> out;
    for (size_t w = 2; w <= max_width; w++) {
        out.push_back(rec("qft", w, w * (w - 1) / 2, 0.9));
        out.push_back(rec("hamsim", w, w - 1, 0.8));
    }
    return out;
}

}  // namespace

TEST(hellinger, basic_values) {
    Distribution bell{2, {{0, 0.5}, {3, 0.5}}};
    Distribution zero{2, {{0, 1.0}}};
    Distribution one{2, {{1, 1.0}}};
    EXPECT_NEAR(hellinger_fidelity(bell, bell), 1.0, 1e-15);
    EXPECT_EQ(hellinger_fidelity(zero, one), 0.0);
    EXPECT_NEAR(hellinger_fidelity(bell, zero), 0.5, 1e-15);
    EXPECT_NEAR(hellinger_fidelity(zero, bell), 0.5, 1e-15);
    EXPECT_THROW(hellinger_fidelity(bell, Distribution{3, {{0, 1.0}}}), std::invalid_argument);
    EXPECT_THROW(hellinger_fidelity(bell, Distribution{2, {{0, 0.8}}}), std::invalid_argument);
}

TEST(hellinger, symmetric_and_relabel_invariant) {
    Rng rng = make_rng(1, "hellinger");
    for (int trial = 0; trial < 100; trial++) {
        Distribution p{3, {}};
        Distribution q{3, {}};
        for (Bits b = 0; b < 8; b++) {
            p.probs[b] = uniform01(rng);
            q.probs[b] = uniform01(rng);
        }
        p = renormalized(p);
        q = renormalized(q);
        Distribution pr{3, {}};
        Distribution qr{3, {}};
        for (Bits b = 0; b < 8; b++) {
            pr.probs[b ^ 5] = p.probs[b];
            qr.probs[b ^ 5] = q.probs[b];
        }
        double f = hellinger_fidelity(p, q);
        EXPECT_NEAR(f, hellinger_fidelity(q, p), 1e-15);
        EXPECT_NEAR(f, hellinger_fidelity(pr, qr), 1e-15);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0 + 1e-12);
    }
}

TEST(aq_score, all_passing_limited_by_widths) {
    EXPECT_EQ(aq_score(passing_suite(10), false), 10u);
    EXPECT_EQ(aq_score({}, false), 0u);
}

TEST(aq_score, failing_record_case) {
    std::vector<BenchmarkRecord> records = passing_suite(10);
    records.push_back(rec("ae", 5, 30, 0.2));
    AqResult r = aq_score_detailed(records, false);
    EXPECT_EQ(r.score, 5u);
    EXPECT_EQ(r.missing.size(), 0u);
}

TEST(aq_score, threshold_is_strict_and_exact) {
    std::vector<BenchmarkRecord> records = passing_suite(4);
    records.push_back(rec("qpe", 3, 4, std::exp(-1.0)));
    EXPECT_EQ(aq_score(records, false), 2u);
    records.back().f_simple = std::nextafter(std::exp(-1.0), 1.0);
    EXPECT_EQ(aq_score(records, false), 4u);
    // 0.37 is above 1/e; the rounded constant would wrongly fail it.
    records.back().f_simple = 0.3679;
    EXPECT_EQ(aq_score(records, false), 4u);
}

TEST(aq_score, voted_flag_and_no_qualifying_width) {
    std::vector<BenchmarkRecord> records = passing_suite(6);
    records.push_back(BenchmarkRecord{"qft", 1, 0, 0, 0.1, 0.9, std::nullopt});
    EXPECT_EQ(aq_score(records, false), 0u);
    EXPECT_EQ(aq_score(records, true), 6u);
}

TEST(aq_score, coverage_warning_lists_gaps) {
    std::vector<BenchmarkRecord> records{rec("qft", 2, 1, 0.9), rec("qft", 4, 6, 0.9), rec("qpe", 2, 1, 0.9),
                                         rec("qpe", 3, 2, 0.9), rec("qpe", 4, 3, 0.9)};
    AqResult r = aq_score_detailed(records, false);
    EXPECT_EQ(r.score, 4u);
    ASSERT_EQ(r.missing.size(), 1u);
    EXPECT_EQ(r.missing[0].first, "qft");
    EXPECT_EQ(r.missing[0].second, 3u);
    EXPECT_NE(r.coverage_warning().find("(qft, 3)"), std::string::npos);
}

TEST(aq_score, monotone_under_additions_and_improvements) {
    Rng rng = make_rng(2, "aq-monotone");
    for (int trial = 0; trial < 1000; trial++) {
        std::vector<BenchmarkRecord> records;
        size_t n = 1 + uniform_index(rng, 30);
        for (size_t i = 0; i < n; i++) {
            size_t w = 1 + uniform_index(rng, 12);
            records.push_back(rec("f" + std::to_string(uniform_index(rng, 3)), w, uniform_index(rng, w * w + 20),
                                  uniform01(rng)));
        }
        size_t base = aq_score(records, false);
        auto more = records;
        size_t w = 1 + uniform_index(rng, 12);
        more.push_back(rec("f0", w, uniform_index(rng, 150), AQ_THRESHOLD + (1 - AQ_THRESHOLD) * uniform01(rng) + 1e-9));
        EXPECT_GE(aq_score(more, false), base);
        auto better = records;
        auto &target = better[uniform_index(rng, better.size())];
        target.f_simple = std::min(1.0, target.f_simple + uniform01(rng));
        EXPECT_GE(aq_score(better, false), base);
    }
}

TEST(volumetric, cells_and_difference) {
    std::vector<BenchmarkRecord> records{rec("a", 2, 3, 0.4), rec("b", 3, 2, 0.6), rec("c", 5, 20, 0.3)};
    records[0].compiled_2q = 3;
    records[1].compiled_2q = 2;
    records[2].compiled_2q = 20;
    records[0].f_predicted = 0.5;
    records[1].f_predicted = 0.9;
    records[2].f_predicted = 0.6;
    std::vector<size_t> wedges = power_of_two_edges(5);
    std::vector<size_t> dedges = power_of_two_edges(20);
    EXPECT_EQ(wedges, (std::vector<size_t>{0, 1, 2, 4, 8}));
    VolumetricTable mean = volumetric_table(records, wedges, dedges, Aggregate::Mean, FidelityKind::Simple);
    ASSERT_EQ(mean.cells.size(), 2u);
    const VolumetricCell *shared = mean.find(2, 2);
    ASSERT_NE(shared, nullptr);
    EXPECT_EQ(shared->count, 2u);
    EXPECT_NEAR(shared->value, 0.5, 1e-15);
    EXPECT_EQ(mean.find(0, 0), nullptr);
    VolumetricTable low = volumetric_table(records, wedges, dedges, Aggregate::Min, FidelityKind::Simple);
    EXPECT_NEAR(low.find(2, 2)->value, 0.4, 1e-15);

    VolumetricTable predicted = volumetric_table(records, wedges, dedges, Aggregate::Mean, FidelityKind::Predicted);
    VolumetricTable diff = volumetric_difference(predicted, mean);
    for (const auto &c : diff.cells) {
        EXPECT_GT(c.value, 0.0);
    }
    EXPECT_NE(mean.to_csv().find("width_lo,width_hi,depth_lo,depth_hi,count,value"), std::string::npos);
    EXPECT_THROW(volumetric_table(records, {0, 4}, dedges, Aggregate::Mean, FidelityKind::Simple),
                 std::invalid_argument);
    EXPECT_THROW(volumetric_table(records, {4, 2}, dedges, Aggregate::Mean, FidelityKind::Simple),
                 std::invalid_argument);
}

TEST(volumetric, reference_depth_axis) {
    std::vector<BenchmarkRecord> records{BenchmarkRecord{"a", 3, 3, 40, 0.5, 0.6, std::nullopt}};
    std::vector<size_t> edges = power_of_two_edges(64);
    VolumetricTable compiled = volumetric_table(records, edges, edges, Aggregate::Mean, FidelityKind::Voted);
    VolumetricTable reference =
        volumetric_table(records, edges, edges, Aggregate::Mean, FidelityKind::Voted, DepthAxis::Reference);
    EXPECT_EQ(compiled.cells[0].depth_bin, 6u);
    EXPECT_EQ(reference.cells[0].depth_bin, 2u);
    EXPECT_EQ(reference.cells[0].value, 0.6);
}

TEST(regression, exact_line_and_null_model) {
    std::vector<double> x{1, 2, 3, 4, 5};
    std::vector<double> y{3, 5, 7, 9, 11};
    LinearFit fit = linear_regression_with_ci(x, y);
    EXPECT_NEAR(fit.slope, 2, 1e-12);
    EXPECT_NEAR(fit.intercept, 1, 1e-12);
    EXPECT_LT(fit.slope_hi - fit.slope_lo, 1e-9);
    EXPECT_FALSE(fit.no_correlation());

    Rng rng = make_rng(3, "null");
    int contains_zero = 0;
    const int trials = 400;
    for (int t = 0; t < trials; t++) {
        std::vector<double> xs(435);
        std::vector<double> ys(435);
        for (size_t i = 0; i < xs.size(); i++) {
            xs[i] = static_cast<double>(uniform_index(rng, 29) + 1);
            ys[i] = uniform01(rng);
        }
        contains_zero += linear_regression_with_ci(xs, ys).no_correlation();
    }
    EXPECT_GT(contains_zero, static_cast<int>(0.93 * trials));

    std::vector<double> flat{2, 2, 2};
    EXPECT_THROW(linear_regression_with_ci(flat, flat), std::invalid_argument);
    std::vector<double> two{1, 2};
    EXPECT_THROW(linear_regression_with_ci(two, two), std::invalid_argument);
}

TEST(decay_slope, exact_exponential) {
    std::vector<BenchmarkRecord> records;
    for (size_t n : {10, 50, 120, 300}) {
        BenchmarkRecord r = rec("qft", 4, n, std::exp(-0.005 * static_cast<double>(n)));
        records.push_back(r);
    }
    records.push_back(rec("qft", 9, 400, 0.0));
    DecaySlope s = decay_slope(records);
    EXPECT_NEAR(s.rate, 0.005, 1e-9);
    EXPECT_EQ(s.used, 4u);
    EXPECT_EQ(s.warnings.size(), 1u);
    records.resize(2);
    EXPECT_THROW(decay_slope(records), std::invalid_argument);
}

TEST(records_csv, round_trip_and_row_errors) {
    std::vector<BenchmarkRecord> records{BenchmarkRecord{"qft", 4, 6, 12, 0.91, 0.95, 0.97},
                                         BenchmarkRecord{"ae", 7, 870, 604, 0.125, 0.2, std::nullopt}};
    std::string csv = records_to_csv(records);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "family,w_c,d_c,compiled_2q,f_simple,f_voted,f_predicted");
    EXPECT_EQ(records_from_csv(csv), records);
    EXPECT_TRUE(std::isnan(record_fidelity(records[1], FidelityKind::Predicted)));
    EXPECT_EQ(record_fidelity(records[0], FidelityKind::Voted), 0.95);

    std::string bad = csv + "qpe,3,x,4,0.5,0.5,\n";
    try {
        records_from_csv(bad);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 4u);
    }
    EXPECT_THROW(records_from_csv("family,w_c\nqft,3\n"), ParseError);
    EXPECT_THROW(records_from_csv(csv + "qpe,3,2,4,0.5\n"), ParseError);
}

TEST(timing, execution_estimates) {
    TimingTable table;
    ExecutionEstimate empty = estimate_execution(Circuit(2), table, 10);
    EXPECT_EQ(empty.gate_time_fraction, 0.0);
    EXPECT_EQ(empty.total_us, 10 * table.cooling_us);

    Circuit ten(1);
    for (int i = 0; i < 10; i++) {
        ten.append(Gate::x90(0));
    }
    EXPECT_NEAR(estimate_execution(ten, table, 1).gate_us_per_shot, 1100, 1e-9);

    Circuit zz(2);
    zz.append(Gate::zz(0, 1, 0.3)).append(Gate::rz(0, 1));
    ExecutionEstimate e = estimate_execution(zz, table, 100);
    EXPECT_NEAR(e.gate_us_per_shot, 900, 1e-9);
    EXPECT_NEAR(e.total_us, 100 * (900 + 3000), 1e-6);
    EXPECT_NEAR(e.gate_time_fraction, 900.0 / 3900, 1e-12);

    table.zz_per_pair_us[{0, 1}] = 1000;
    table.padding_us = 5;
    EXPECT_NEAR(estimate_execution(zz, table, 1).gate_us_per_shot, 1005, 1e-9);

    Circuit cnot(2);
    cnot.append(Gate::cnot(0, 1));
    EXPECT_THROW(estimate_execution(cnot, table, 1), std::invalid_argument);
}

TEST(timing, additive_under_concatenation) {
    TimingTable table;
    table.prep_us = 50;
    table.readout_us = 200;
    Circuit a(2);
    a.append(Gate::x90(0)).append(Gate::xx(0, 1, 0.2));
    Circuit b(2);
    b.append(Gate::zz(1, 0, 0.1)).append(Gate::y90(1));
    Circuit ab = a;
    ab.append(b);
    double block = table.cooling_us + table.prep_us + table.readout_us;
    EXPECT_NEAR(estimate_execution(ab, table, 1).total_us,
                estimate_execution(a, table, 1).total_us + estimate_execution(b, table, 1).total_us - block, 1e-9);
}

TEST(timing, json_round_trip_and_validation) {
    TimingTable table;
    table.zz_per_pair_us[{2, 5}] = 850;
    table.padding_us = 3;
    TimingTable back = timing_table_from_json(timing_table_to_json(table));
    EXPECT_EQ(back.zz_duration(5, 2), 850);
    EXPECT_EQ(back.padding_us, 3);
    EXPECT_EQ(timing_table_from_json("{}").zz_us, 900);
    EXPECT_THROW(timing_table_from_json("{\"zz_us\": -1}"), std::exception);
    EXPECT_THROW(timing_table_from_json("{\"zz_us\": "), ParseError);
}
