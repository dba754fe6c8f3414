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

#include "ionbench/analysis/records.h"

#include <charconv>
#include <limits>
#include <sstream>

#include "ionbench/circuit/circuit_json.h"
#include "ionbench/util/errors.h"

namespace ionbench {

namespace {

constexpr const char *HEADER = "family,w_c,d_c,compiled_2q,f_simple,f_voted,f_predicted";

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

size_t parse_count(const std::string &s, const char *name, size_t row) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError(std::string("field ") + name +
                             " is not a non-negative integer: '" + s + "'",
                         row, 0);
    }
    return v;
}

double parse_fidelity(const std::string &s, const char *name, size_t row) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError(std::string("field ") + name + " is not a number: '" +
                             s + "'",
                         row, 0);
    }
    if (!(v >= 0 && v <= 1)) {
        throw ParseError(std::string("field ") + name + " must lie in [0, 1]",
                         row, 0);
    }
    return v;
}

}  // namespace

double record_fidelity(const BenchmarkRecord &record, FidelityKind kind) {
    switch (kind) {
        case FidelityKind::Simple:
            return record.f_simple;
        case FidelityKind::Voted:
            return record.f_voted;
        case FidelityKind::Predicted:
            return record.f_predicted.value_or(std::numeric_limits<double>::quiet_NaN());
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::string records_to_csv(const std::vector<BenchmarkRecord> &records) {
    std::ostringstream out;
    out << HEADER << "\n";
    for (const auto &r : records) {
        out << r.family << "," << r.w_c << "," << r.d_c << "," << r.compiled_2q << "," << format_double(r.f_simple)
            << "," << format_double(r.f_voted) << ",";
        if (r.f_predicted) {
            out << format_double(*r.f_predicted);
        }
        out << "\n";
    }
    return out.str();
}

std::vector<BenchmarkRecord> records_from_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    size_t row = 0;
    std::vector<BenchmarkRecord> out;
    bool header_seen = false;
    while (std::getline(in, line)) {
        row++;
        std::string t = trim(line);
        if (t.empty()) {
            continue;
        }
        if (!header_seen) {
            if (t != HEADER) {
                throw ParseError(std::string("expected header '") + HEADER + "'", row, 0);
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> f = split_fields(t);
        if (f.size() != 7) {
            throw ParseError("expected 7 fields, found " + std::to_string(f.size()),
                             row, 0);
        }
        for (auto &x : f) {
            x = trim(x);
        }
        if (f[0].empty()) {
            throw ParseError("empty family", row, 0);
        }
        BenchmarkRecord r;
        r.family = f[0];
        r.w_c = parse_count(f[1], "w_c", row);
        r.d_c = parse_count(f[2], "d_c", row);
        r.compiled_2q = parse_count(f[3], "compiled_2q", row);
        r.f_simple = parse_fidelity(f[4], "f_simple", row);
        r.f_voted = parse_fidelity(f[5], "f_voted", row);
        if (!f[6].empty()) {
            r.f_predicted = parse_fidelity(f[6], "f_predicted", row);
        }
        out.push_back(std::move(r));
    }
    if (!header_seen) {
        throw ParseError("records CSV is empty", 1, 0);
    }
    return out;
}

}  // namespace ionbench
