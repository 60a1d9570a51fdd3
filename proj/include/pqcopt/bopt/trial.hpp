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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqcopt {

enum class TrialState { Pending, Complete, Failed };

std::string_view to_string(TrialState s);
TrialState parse_trial_state(std::string_view s);

/// One evaluated assignment. Objectives are stored in their natural units:
/// objectives[0] is maximized (accuracy), objectives[1], if present, is
/// minimized (complexity).
struct Trial {
    int id = 0;
    std::vector<int> assignment;
    std::vector<double> objectives;
    TrialState state = TrialState::Pending;
    std::uint64_t seed = 0;
    double wall_time = 0.0;
    std::string error;

    bool complete() const { return state == TrialState::Complete; }
};

/// Objectives of a completed trial as a vector to minimize.
std::vector<double> minimization_vector(const Trial &t);

/// a dominates b: no worse in every objective and strictly better in one.
bool dominates(const Trial &a, const Trial &b);

/// Completed trials not dominated by any other completed trial, ordered by id.
std::vector<Trial> pareto_front(std::span<const Trial> history);

/// Ranks of completed-trial minimization vectors: fronts[0] is non-dominated,
/// fronts[1] is non-dominated once fronts[0] is removed, etc. Indices refer
/// to `points`; each front is sorted ascending.
std::vector<std::vector<std::size_t>> non_dominated_sort(const std::vector<std::vector<double>> &points);

/// NSGA-II crowding distance of each member of `front` (indices into
/// `points`); boundary members get +infinity.
std::vector<double> crowding_distance(const std::vector<std::vector<double>> &points,
                                      std::span<const std::size_t> front);

} // namespace pqcopt
