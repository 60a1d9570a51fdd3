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

#include "pqcopt/bopt/optimize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace pqcopt {

namespace {

constexpr std::uint64_t kSuggestStream = 0x7e5f0001;
constexpr std::uint64_t kEvalStream = 0x7e5f0002;

} // namespace

std::uint64_t trial_seed(std::uint64_t master, int id) {
    return derive_seed(master, {kEvalStream, static_cast<std::uint64_t>(id)});
}

OptimizeResult optimize(const Evaluator &evaluator, const SearchSpace &space,
                        const OptimizeConfig &cfg, std::vector<Trial> resume) {
    if (cfg.n_trials < 1) {
        throw std::invalid_argument("optimize: n_trials must be at least 1");
    }
    const bool multi = cfg.mode == OptimizeConfig::Mode::Multi;
    const std::size_t arity = multi ? 2 : 1;

    std::vector<Trial> history;
    for (Trial &t : resume) {
        if (t.state == TrialState::Pending) {
            continue; // never finished; its id is re-run
        }
        history.push_back(std::move(t));
    }
    std::sort(history.begin(), history.end(), [](const Trial &a, const Trial &b) { return a.id < b.id; });
    for (std::size_t i = 0; i < history.size(); ++i) {
        if (history[i].id != static_cast<int>(i)) {
            throw std::invalid_argument("resumed trial ids must be 0..n-1 without gaps");
        }
    }

    std::mutex mu;
    int next_id = static_cast<int>(history.size());
    history.reserve(static_cast<std::size_t>(std::max(cfg.n_trials, next_id)));

    auto worker = [&] {
        for (;;) {
            Trial trial;
            {
                std::lock_guard lock(mu);
                if (next_id >= cfg.n_trials) {
                    return;
                }
                trial.id = next_id++;
                trial.seed = trial_seed(cfg.seed, trial.id);
                Rng rng(derive_seed(cfg.seed, {kSuggestStream, static_cast<std::uint64_t>(trial.id)}));
                if (cfg.random_search) {
                    trial.assignment = space.random_assignment(rng);
                } else if (multi) {
                    trial.assignment = motpe_suggest(history, space, rng, cfg.tpe);
                } else {
                    trial.assignment = tpe_suggest(history, space, rng, cfg.tpe);
                }
                history.push_back(trial); // pending placeholder
            }

            const auto t0 = std::chrono::steady_clock::now();
            try {
                trial.objectives = evaluator(trial.assignment, TrialContext{trial.id, trial.seed});
                if (trial.objectives.size() != arity) {
                    throw std::runtime_error("evaluator returned " +
                                             std::to_string(trial.objectives.size()) +
                                             " objectives; expected " + std::to_string(arity));
                }
                for (double v : trial.objectives) {
                    if (!std::isfinite(v)) {
                        throw std::runtime_error("evaluator returned a non-finite objective");
                    }
                }
                trial.state = TrialState::Complete;
            } catch (const std::exception &e) {
                trial.state = TrialState::Failed;
                trial.objectives.clear();
                trial.error = e.what();
            } catch (...) {
                trial.state = TrialState::Failed;
                trial.objectives.clear();
                trial.error = "unknown error";
            }
            trial.wall_time =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

            std::lock_guard lock(mu);
            auto it = std::find_if(history.begin(), history.end(),
                                   [&](const Trial &t) { return t.id == trial.id; });
            *it = trial;
            if (cfg.on_record) {
                cfg.on_record(trial);
            }
        }
    };

    const int n_workers = std::max(1, cfg.parallelism);
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex err_mu;
        for (int w = 0; w < n_workers; ++w) {
            pool.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
        if (error) {
            std::rethrow_exception(error);
        }
    }

    std::sort(history.begin(), history.end(), [](const Trial &a, const Trial &b) { return a.id < b.id; });
    OptimizeResult result;
    result.history = std::move(history);
    if (multi) {
        result.front = pareto_front(result.history);
    } else {
        for (const Trial &t : result.history) {
            if (t.complete() && (!result.best || t.objectives[0] > result.best->objectives[0])) {
                result.best = t;
            }
        }
    }
    return result;
}

} // namespace pqcopt
