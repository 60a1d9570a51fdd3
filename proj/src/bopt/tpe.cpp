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

#include "pqcopt/bopt/tpe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pqcopt {

namespace {

std::size_t good_count(std::size_t n, double gamma) {
    return static_cast<std::size_t>(std::ceil(gamma * static_cast<double>(n) - 1e-12));
}

std::size_t complete_count(std::span<const Trial> history) {
    return static_cast<std::size_t>(
        std::count_if(history.begin(), history.end(), [](const Trial &t) { return t.complete(); }));
}

void add_pending(std::span<const Trial> history, TpeSplit &split) {
    for (std::size_t i = 0; i < history.size(); ++i) {
        if (history[i].state == TrialState::Pending) {
            split.bad.push_back(i);
        }
    }
}

std::vector<int> suggest_from_split(std::span<const Trial> history, const TpeSplit &split,
                                    const SearchSpace &space, Rng &rng, const TpeConfig &cfg) {
    const auto &dims = space.dimensions();
    // log l(v) - log g(v) per dimension and value, plus l's cumulative weights.
    std::vector<std::vector<double>> score(dims.size());
    std::vector<std::vector<double>> l_cum(dims.size());
    for (std::size_t d = 0; d < dims.size(); ++d) {
        const auto card = static_cast<std::size_t>(dims[d].cardinality);
        std::vector<double> l(card, cfg.prior_weight), g(card, cfg.prior_weight);
        for (std::size_t i : split.good) {
            l[static_cast<std::size_t>(history[i].assignment[d])] += 1.0;
        }
        for (std::size_t i : split.bad) {
            g[static_cast<std::size_t>(history[i].assignment[d])] += 1.0;
        }
        const double lz = cfg.prior_weight * static_cast<double>(card) + static_cast<double>(split.good.size());
        const double gz = cfg.prior_weight * static_cast<double>(card) + static_cast<double>(split.bad.size());
        score[d].resize(card);
        l_cum[d].resize(card);
        double acc = 0.0;
        for (std::size_t v = 0; v < card; ++v) {
            score[d][v] = std::log(l[v] / lz) - std::log(g[v] / gz);
            acc += l[v];
            l_cum[d][v] = acc;
        }
    }

    std::vector<int> best;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < cfg.n_candidates; ++c) {
        std::vector<int> cand(dims.size());
        double s = 0.0;
        for (std::size_t d = 0; d < dims.size(); ++d) {
            const double u = uniform01(rng) * l_cum[d].back();
            auto it = std::upper_bound(l_cum[d].begin(), l_cum[d].end(), u);
            const auto v = static_cast<std::size_t>(
                std::min<std::ptrdiff_t>(it - l_cum[d].begin(), static_cast<std::ptrdiff_t>(l_cum[d].size()) - 1));
            cand[d] = static_cast<int>(v);
            s += score[d][v];
        }
        if (s > best_score) {
            best_score = s;
            best = std::move(cand);
        }
    }
    return best;
}

void check_history(std::span<const Trial> history, const SearchSpace &space, std::size_t arity) {
    for (const Trial &t : history) {
        if (t.state == TrialState::Failed) {
            continue;
        }
        if (!space.contains(t.assignment)) {
            throw std::invalid_argument("trial " + std::to_string(t.id) + " is outside the space");
        }
        if (t.complete() && t.objectives.size() != arity) {
            throw std::invalid_argument("objective-arity mismatch in trial " + std::to_string(t.id));
        }
    }
}

} // namespace

TpeSplit tpe_split(std::span<const Trial> history, double gamma) {
    std::vector<std::size_t> done;
    for (std::size_t i = 0; i < history.size(); ++i) {
        if (history[i].complete()) {
            done.push_back(i);
        }
    }
    std::stable_sort(done.begin(), done.end(), [&](std::size_t a, std::size_t b) {
        const Trial &ta = history[a], &tb = history[b];
        if (ta.objectives[0] != tb.objectives[0]) {
            return ta.objectives[0] > tb.objectives[0];
        }
        return ta.id < tb.id;
    });
    const std::size_t n_good = good_count(done.size(), gamma);
    TpeSplit split;
    split.good.assign(done.begin(), done.begin() + static_cast<long>(n_good));
    split.bad.assign(done.begin() + static_cast<long>(n_good), done.end());
    add_pending(history, split);
    return split;
}

TpeSplit motpe_split(std::span<const Trial> history, double gamma) {
    std::vector<std::size_t> done;
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < history.size(); ++i) {
        if (history[i].complete()) {
            done.push_back(i);
            pts.push_back(minimization_vector(history[i]));
        }
    }
    const std::size_t need = good_count(done.size(), gamma);
    TpeSplit split;
    std::vector<bool> is_good(done.size(), false);
    if (!pts.empty()) {
        for (const auto &front : non_dominated_sort(pts)) {
            const std::size_t have = split.good.size();
            if (have >= need) {
                break;
            }
            std::vector<std::size_t> members(front.begin(), front.end());
            if (have + members.size() > need) {
                auto cd = crowding_distance(pts, front);
                std::vector<std::size_t> order(members.size());
                for (std::size_t r = 0; r < order.size(); ++r) {
                    order[r] = r;
                }
                std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                    if (cd[a] != cd[b]) {
                        return cd[a] > cd[b];
                    }
                    return history[done[members[a]]].id < history[done[members[b]]].id;
                });
                std::vector<std::size_t> kept;
                for (std::size_t r = 0; r < need - have; ++r) {
                    kept.push_back(members[order[r]]);
                }
                members = std::move(kept);
            }
            for (std::size_t m : members) {
                split.good.push_back(done[m]);
                is_good[m] = true;
            }
        }
    }
    for (std::size_t m = 0; m < done.size(); ++m) {
        if (!is_good[m]) {
            split.bad.push_back(done[m]);
        }
    }
    add_pending(history, split);
    return split;
}

std::vector<int> tpe_suggest(std::span<const Trial> history, const SearchSpace &space, Rng &rng,
                             const TpeConfig &cfg) {
    check_history(history, space, 1);
    if (complete_count(history) < static_cast<std::size_t>(cfg.n_startup)) {
        return space.random_assignment(rng);
    }
    return suggest_from_split(history, tpe_split(history, cfg.gamma), space, rng, cfg);
}

std::vector<int> motpe_suggest(std::span<const Trial> history, const SearchSpace &space, Rng &rng,
                               const TpeConfig &cfg) {
    check_history(history, space, 2);
    if (complete_count(history) < static_cast<std::size_t>(cfg.n_startup)) {
        return space.random_assignment(rng);
    }
    return suggest_from_split(history, motpe_split(history, cfg.gamma), space, rng, cfg);
}

} // namespace pqcopt
