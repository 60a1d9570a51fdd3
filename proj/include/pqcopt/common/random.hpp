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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace pqcopt {

/// Engine used for every stochastic component. Distributions are implemented
/// here rather than taken from <random> so sequences do not depend on the
/// standard library vendor.
using Rng = std::mt19937_64;

/// One splitmix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t &state);

/// Child seed for a labelled sub-stream, e.g. derive_seed(master, {fold, run}).
/// Each label is folded in with a splitmix64 step, so the result depends on
/// the whole label path but not on evaluation order.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Rng &rng);

/// Uniform integer in [0, n). n must be positive.
std::size_t uniform_index(Rng &rng, std::size_t n);

/// Standard normal via the Box-Muller transform (one draw per call).
double standard_normal(Rng &rng);

template <class T>
void shuffle(std::span<T> items, Rng &rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = uniform_index(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace pqcopt
