// Copyright 2026 The pqcopt Authors
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

#include "pqcopt/common/random.hpp"

#include <cmath>
#include <numbers>

namespace pqcopt {

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t state = base;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t label : path) {
        state = out ^ (label * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
        out = splitmix64(state);
    }
    return out;
}

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(Rng &rng, std::size_t n) {
    // Lemire's multiply-shift with rejection.
    const auto bound = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
        if (static_cast<std::uint64_t>(m) >= threshold) {
            return static_cast<std::size_t>(m >> 64);
        }
    }
}

double standard_normal(Rng &rng) {
    const double u1 = 1.0 - uniform01(rng); // (0, 1]
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace pqcopt
