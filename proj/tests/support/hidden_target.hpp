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

// Cheap objectives over the genome space that need no quantum simulation.

#include <algorithm>
#include <limits>
#include <vector>

#include "pqcopt/bopt/optimize.hpp"
#include "pqcopt/bopt/space.hpp"
#include "pqcopt/bopt/trial.hpp"

namespace fixtures {

// Fraction of dimensions agreeing with a fixed random assignment.
inline pqcopt::Evaluator hidden_target(const pqcopt::SearchSpace &space, std::uint64_t seed) {
    pqcopt::Rng rng(seed);
    auto target = space.random_assignment(rng);
    return [target](std::span<const int> a, const pqcopt::TrialContext &) {
        int hits = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            hits += a[i] == target[i];
        }
        return std::vector<double>{static_cast<double>(hits) / static_cast<double>(a.size())};
    };
}

// Two objectives: agreement with a target (maximised) and the share of
// non-zero dimensions (minimised). They conflict wherever the target is
// non-zero.
inline pqcopt::Evaluator target_vs_cardinality(const pqcopt::SearchSpace &space, std::uint64_t seed) {
    auto match = hidden_target(space, seed);
    return [match](std::span<const int> a, const pqcopt::TrialContext &ctx) {
        int nonzero = 0;
        for (int v : a) {
            nonzero += v != 0;
        }
        return std::vector<double>{match(a, ctx)[0],
                                   static_cast<double>(nonzero) / static_cast<double>(a.size())};
    };
}

// Area dominated by the completed trials in (-obj0, obj1) space, bounded by
// the reference point (0, ref1).
inline double hypervolume(std::span<const pqcopt::Trial> history, double ref1 = 1.05) {
    std::vector<std::pair<double, double>> pts;
    for (const auto &t : pqcopt::pareto_front(history)) {
        const auto v = pqcopt::minimization_vector(t);
        if (v[0] < 0.0 && v[1] < ref1) {
            pts.emplace_back(v[0], v[1]);
        }
    }
    std::sort(pts.begin(), pts.end());
    double area = 0.0, ceiling = ref1;
    for (const auto &[x, y] : pts) {
        if (y < ceiling) {
            area += (0.0 - x) * (ceiling - y);
            ceiling = y;
        }
    }
    return area;
}

inline double best_of(const pqcopt::OptimizeResult &r) {
    return r.best ? r.best->objectives[0] : -std::numeric_limits<double>::infinity();
}

} // namespace fixtures
