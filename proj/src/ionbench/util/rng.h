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

#ifndef IONBENCH_UTIL_RNG_H
#define IONBENCH_UTIL_RNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace ionbench {

/// Engine used everywhere randomness is needed. One engine per independent
/// stream; streams are keyed by (root seed, purpose, index) so results do not
/// depend on how work is scheduled across threads.
using Rng = std::mt19937_64;

constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr uint64_t fnv1a(std::string_view text) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : text) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Seed of the named sub-stream `purpose`/`index` under `root`.
constexpr uint64_t derive_seed(uint64_t root, std::string_view purpose, uint64_t index = 0) {
    return splitmix64(splitmix64(root ^ fnv1a(purpose)) + splitmix64(index + 0x5851F42D4C957F2DULL));
}

inline Rng make_rng(uint64_t root, std::string_view purpose, uint64_t index = 0) {
    return Rng(derive_seed(root, purpose, index));
}

/// Uniform double in [0, 1) from the top 53 bits. Portable across standard
/// libraries, unlike std::uniform_real_distribution.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n). Rejection sampling keeps it unbiased and portable.
inline uint64_t uniform_index(Rng &rng, uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

}  // namespace ionbench

#endif
