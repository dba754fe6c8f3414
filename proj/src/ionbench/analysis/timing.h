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

#ifndef IONBENCH_ANALYSIS_TIMING_H
#define IONBENCH_ANALYSIS_TIMING_H

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "ionbench/circuit/circuit.h"

namespace ionbench {

/// Durations in microseconds.
struct TimingTable {
    double single_qubit_us = 110;
    /// Average ZZ duration; per-pair values lie roughly in [770, 1103].
    double zz_us = 900;
    std::map<std::pair<uint32_t, uint32_t>, double> zz_per_pair_us;  // key has first < second
    /// Bare MS (XX) interaction: the ZZ duration minus its two wrapping pulses.
    double xx_us = 680;
    double rz_us = 0;
    double cooling_us = 3000;
    double prep_us = 0;
    double readout_us = 0;
    /// Dead time added after every physical (non-RZ) gate.
    double padding_us = 0;

    double zz_duration(uint32_t a, uint32_t b) const;
    /// Throws std::invalid_argument if a gate duration is not positive or any
    /// other duration is negative.
    void validate() const;
};

/// {"single_qubit_us": 110, "zz_us": 900, "zz_per_pair_us": {"2,5": 850}, ...};
/// missing fields keep their defaults. Throws ParseError.
TimingTable timing_table_from_json(const std::string &text);
std::string timing_table_to_json(const TimingTable &table);

struct ExecutionEstimate {
    double total_us = 0;
    /// Gate durations plus padding in one shot.
    double gate_us_per_shot = 0;
    /// Gate durations plus padding, all shots.
    double gate_us = 0;
    double gate_time_fraction = 0;
};

/// total = shots * (cooling + prep + sum gate durations + sum padding + readout).
/// Throws std::invalid_argument on non-native gates.
ExecutionEstimate estimate_execution(const Circuit &circuit, const TimingTable &timing, uint64_t n_shots);

}  // namespace ionbench

#endif
