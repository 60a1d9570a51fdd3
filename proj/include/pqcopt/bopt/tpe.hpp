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

#include <span>
#include <vector>

#include "pqcopt/bopt/space.hpp"
#include "pqcopt/bopt/trial.hpp"

namespace pqcopt {

struct TpeConfig {
    double gamma = 0.25;
    int n_candidates = 24;
    double prior_weight = 1.0;
    int n_startup = 10;
};

/// Indices into the history. Failed trials appear in neither set; pending
/// trials are counted as bad (constant liar).
struct TpeSplit {
    std::vector<std::size_t> good;
    std::vector<std::size_t> bad;
};

/// Best ceil(gamma * n) completed trials by objectives[0] (higher first,
/// lower id on ties) form the good set.
TpeSplit tpe_split(std::span<const Trial> history, double gamma);

/// Good set from non-dominated sorting: whole fronts in rank order until
/// ceil(gamma * n) trials, the last front truncated by crowding distance
/// (larger first, lower id on ties).
TpeSplit motpe_split(std::span<const Trial> history, double gamma);

/// Startup: uniform draw while fewer than n_startup trials are complete.
/// Otherwise per-dimension smoothed categorical densities l (good) and g
/// (bad), n_candidates draws from l, and the candidate maximizing
/// sum log(l / g) (first on ties).
std::vector<int> tpe_suggest(std::span<const Trial> history, const SearchSpace &space, Rng &rng,
                             const TpeConfig &cfg = {});

std::vector<int> motpe_suggest(std::span<const Trial> history, const SearchSpace &space, Rng &rng,
                               const TpeConfig &cfg = {});

} // namespace pqcopt
