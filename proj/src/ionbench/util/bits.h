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

#ifndef IONBENCH_UTIL_BITS_H
#define IONBENCH_UTIL_BITS_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ionbench {

/// Computational-basis outcome. Bit q holds qubit q.
using Bits = uint64_t;

constexpr size_t MAX_BITSTRING_WIDTH = 64;

/// Renders `bits` with character q holding qubit q (leftmost char = qubit 0).
std::string to_bitstring(Bits bits, size_t width);

/// Inverse of to_bitstring. Throws std::invalid_argument on characters other
/// than '0'/'1' or strings longer than MAX_BITSTRING_WIDTH.
Bits parse_bitstring(std::string_view text);

}  // namespace ionbench

#endif
