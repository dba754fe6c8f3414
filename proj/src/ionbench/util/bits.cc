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

#include "ionbench/util/bits.h"

#include <stdexcept>

namespace ionbench {

std::string to_bitstring(Bits bits, size_t width) {
    std::string out(width, '0');
    for (size_t q = 0; q < width; q++) {
        if ((bits >> q) & 1) {
            out[q] = '1';
        }
    }
    return out;
}

Bits parse_bitstring(std::string_view text) {
    if (text.size() > MAX_BITSTRING_WIDTH) {
        throw std::invalid_argument("bitstring longer than 64 characters");
    }
    Bits bits = 0;
    for (size_t q = 0; q < text.size(); q++) {
        if (text[q] == '1') {
            bits |= Bits{1} << q;
        } else if (text[q] != '0') {
            throw std::invalid_argument("bad character in bitstring '" + std::string(text) + "'");
        }
    }
    return bits;
}

}  // namespace ionbench
