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
#include "ionbench/drb/drb.h"
#include "ionbench/oracles/oracles.h"
#include "ionbench/util/errors.h"
#include "ionbench/util/rng.h"

using namespace ionbench;
using namespace ionbench::oracles;

TEST(subset_enumeration, values) {
    std::vector<double> half{0.5, 0.5};
    EXPECT_NEAR(subset_enumeration_pmf(half, 1), 0.5, 1e-15);
    std::vector<double> equal{0.6, 0.6, 0.6};
    EXPECT_NEAR(subset_enumeration_pmf(equal, 3), 0.216, 1e-15);
    Rng rng = make_rng(1, "subset");
    std::vector<double> f(9);
    for (double &x : f) {
        x = uniform01(rng);
    }
    double total = 0;
    for (size_t m = 0; m <= f.size(); m++) {
        total += subset_enumeration_pmf(f, m);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    std::vector<double> big(13, 0.5);
    EXPECT_THROW(subset_enumeration_pmf(big, 1), SizeError);
    EXPECT_THROW(subset_enumeration_pmf(equal, 4), std::invalid_argument);
}

TEST(density_channel, step_properties) {
    DenseMatrix rho{2, {1, 0, 0, 0}};
    // A zero-angle RZ is an identity gate that still passes through the channel.
    DenseMatrix mixed = density_channel_step(rho, Gate::rz(0, 0), 1.0);
    EXPECT_NEAR(mixed.at(0, 0).real(), 1.0 / 3, 1e-15);
    EXPECT_NEAR(mixed.at(1, 1).real(), 2.0 / 3, 1e-15);

    DenseMatrix pure = density_channel_step(rho, Gate::x90(0), 0.0);
    EXPECT_NEAR(pure.at(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(pure.at(0, 1)), 0.5, 1e-15);

    Rng rng = make_rng(2, "trace");
    for (int trial = 0; trial < 20; trial++) {
        DenseMatrix r{4, std::vector<Complex>(16)};
        for (size_t i = 0; i < 4; i++) {
            for (size_t j = 0; j <= i; j++) {
                Complex v(uniform01(rng), i == j ? 0 : uniform01(rng));
                r.at(i, j) = v;
                r.at(j, i) = std::conj(v);
            }
        }
        Complex tr = 0;
        for (size_t i = 0; i < 4; i++) {
            tr += r.at(i, i);
        }
        DenseMatrix out = density_channel_step(r, Gate::zz(0, 1, uniform01(rng)), uniform01(rng));
        Complex tr2 = 0;
        for (size_t i = 0; i < 4; i++) {
            tr2 += out.at(i, i);
        }
        EXPECT_LT(std::abs(tr - tr2), 1e-14);
    }
    EXPECT_THROW(density_channel_step(DenseMatrix::identity(16), Gate::x90(0), 0.1), SizeError);
}

TEST(clifford_tables, closure_and_identity) {
    CliffordTables t = clifford_tables();
    ASSERT_EQ(t.one_qubit.size(), 24u);
    EXPECT_TRUE(t.one_qubit[0].empty());
    EXPECT_EQ(find_clifford(t, DenseMatrix::identity(2)), 0);
    for (size_t i = 0; i < 24; i++) {
        for (size_t j = 0; j < 24; j++) {
            EXPECT_GE(find_clifford(t, t.one_qubit_unitaries[i] * t.one_qubit_unitaries[j]), 0);
        }
    }
    DenseMatrix t_gate{2, {1, 0, 0, std::polar(1.0, 0.785398)}};
    EXPECT_EQ(find_clifford(t, t_gate), -1);
}

TEST(clifford_tables, drb_inversion_verified) {
    DrbDesign design = DrbDesign::two_qubit_default(0.5);
    for (uint64_t seed = 0; seed < 1000; seed++) {
        DrbCircuit c = sample_drb_circuit(design, 1 + seed % 7, 1000 + seed);
        ASSERT_LT(inversion_error(c.circuit), 1e-10);
    }
}

TEST(self_check, all_pass) {
    std::vector<CheckResult> checks = self_check(3);
    EXPECT_GE(checks.size(), 5u);
    for (const auto &c : checks) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    }
    std::string report = self_check_report(checks);
    EXPECT_NE(report.find("\"passed\": true"), std::string::npos);
}
