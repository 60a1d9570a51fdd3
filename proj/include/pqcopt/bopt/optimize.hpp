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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pqcopt/bopt/tpe.hpp"

namespace pqcopt {

struct TrialContext {
    int id = 0;
    /// Child seed reserved for this trial's evaluation.
    std::uint64_t seed = 0;
};

/// Returns 1 objective (single mode) or 2 (multi mode). Exceptions and
/// non-finite values mark the trial failed.
using Evaluator = std::function<std::vector<double>(std::span<const int>, const TrialContext &)>;

struct OptimizeConfig {
    enum class Mode { Single, Multi };
    int n_trials = 1;
    Mode mode = Mode::Single;
    int parallelism = 1;
    std::uint64_t seed = 0;
    TpeConfig tpe;
    /// Uniform random search instead of TPE (comparison baseline).
    bool random_search = false;
    /// Called under the store lock after each trial is recorded.
    std::function<void(const Trial &)> on_record;
};

struct OptimizeResult {
    /// Ordered by id.
    std::vector<Trial> history;
    /// Single mode: highest objectives[0], lower id on ties.
    std::optional<Trial> best;
    /// Multi mode: Pareto front of the completed trials.
    std::vector<Trial> front;
};

/// Suggest / evaluate / record loop until the history holds n_trials
/// finished (complete or failed) trials, starting from `resume` (e.g. a
/// parsed trial log). Trial t's suggestion uses derive_seed(seed, {t}), so a
/// resumed run at parallelism 1 reproduces an uninterrupted one. Workers
/// suggest and record under one mutex and evaluate outside it.
OptimizeResult optimize(const Evaluator &evaluator, const SearchSpace &space,
                        const OptimizeConfig &cfg, std::vector<Trial> resume = {});

/// Seed that optimize hands to trial `id`'s evaluation.
std::uint64_t trial_seed(std::uint64_t master, int id);

} // namespace pqcopt
