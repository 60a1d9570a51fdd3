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

#include "pqcopt/vqc/train.hpp"

#include <algorithm>
#include <numbers>

namespace pqcopt {

TrainResult train(const VqcModel &model, const Dataset &train_data, const TrainConfig &cfg,
                  const Execution &exec) {
    VqcModel out = model;
    const auto d = static_cast<std::size_t>(model.ansatz().n_params());
    const std::uint64_t loss_seed = derive_seed(cfg.seed, {1});
    if (d == 0) {
        // Nothing to optimise; the loss is reported but not an optimizer step.
        out.set_theta({});
        const double l = loss(out, train_data, cfg.shots, loss_seed, exec);
        return TrainResult{std::move(out), l, l, 0};
    }
    Rng init(derive_seed(cfg.seed, {0}));
    std::vector<double> theta0(d);
    for (double &t : theta0) {
        t = 2.0 * std::numbers::pi * uniform01(init);
    }
    int calls = 0;
    double initial = 0.0;
    auto objective = [&](std::span<const double> theta) {
        const double l = loss(out, theta, train_data, cfg.shots, loss_seed, exec);
        if (calls++ == 0) {
            initial = l;
        }
        return l;
    };
    // The budget floor keeps COBYLA's d + 2 precondition for wide ansatze.
    const int budget = std::max(cfg.max_evals, static_cast<int>(d) + 2);
    CobylaResult r = cobyla_minimize(objective, theta0, {budget, cfg.rhobeg, cfg.rhoend});
    out.set_theta(std::move(r.x));
    return TrainResult{std::move(out), initial, r.f, r.evals};
}

} // namespace pqcopt
