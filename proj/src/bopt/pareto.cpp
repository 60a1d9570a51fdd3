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

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pqcopt/bopt/trial.hpp"

namespace pqcopt {

std::string_view to_string(TrialState s) {
    switch (s) {
    case TrialState::Pending:
        return "pending";
    case TrialState::Complete:
        return "complete";
    case TrialState::Failed:
        return "failed";
    }
    return "?";
}

TrialState parse_trial_state(std::string_view s) {
    if (s == "pending") {
        return TrialState::Pending;
    }
    if (s == "complete") {
        return TrialState::Complete;
    }
    if (s == "failed") {
        return TrialState::Failed;
    }
    throw std::invalid_argument("unknown trial state " + std::string(s));
}

std::vector<double> minimization_vector(const Trial &t) {
    std::vector<double> v = t.objectives;
    if (!v.empty()) {
        v[0] = -v[0];
    }
    return v;
}

namespace {

bool dominates_min(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("objective-arity mismatch");
    }
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        strict = strict || a[i] < b[i];
    }
    return strict;
}

} // namespace

bool dominates(const Trial &a, const Trial &b) {
    return dominates_min(minimization_vector(a), minimization_vector(b));
}

std::vector<Trial> pareto_front(std::span<const Trial> history) {
    std::vector<const Trial *> done;
    for (const Trial &t : history) {
        if (t.complete()) {
            done.push_back(&t);
        }
    }
    std::vector<std::vector<double>> pts;
    for (const Trial *t : done) {
        pts.push_back(minimization_vector(*t));
    }
    std::vector<Trial> front;
    if (pts.empty()) {
        return front;
    }
    const auto fronts = non_dominated_sort(pts);
    for (std::size_t i : fronts.front()) {
        front.push_back(*done[i]);
    }
    std::sort(front.begin(), front.end(), [](const Trial &a, const Trial &b) { return a.id < b.id; });
    return front;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(const std::vector<std::vector<double>> &pts) {
    const std::size_t n = pts.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<int> count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates_min(pts[i], pts[j])) {
                dominated[i].push_back(j);
                ++count[j];
            } else if (dominates_min(pts[j], pts[i])) {
                dominated[j].push_back(i);
                ++count[i];
            }
        }
    }
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (count[i] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated[i]) {
                if (--count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<std::vector<double>> &pts,
                                      std::span<const std::size_t> front) {
    const std::size_t m = front.size();
    std::vector<double> dist(m, 0.0);
    if (m == 0) {
        return dist;
    }
    const double inf = std::numeric_limits<double>::infinity();
    const std::size_t n_obj = pts[front[0]].size();
    std::vector<std::size_t> order(m);
    for (std::size_t o = 0; o < n_obj; ++o) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pts[front[a]][o] < pts[front[b]][o];
        });
        const double lo = pts[front[order.front()]][o];
        const double hi = pts[front[order.back()]][o];
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        if (hi <= lo) {
            continue;
        }
        for (std::size_t r = 1; r + 1 < m; ++r) {
            dist[order[r]] += (pts[front[order[r + 1]]][o] - pts[front[order[r - 1]]][o]) / (hi - lo);
        }
    }
    return dist;
}

} // namespace pqcopt
