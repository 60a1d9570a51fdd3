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

#include "pqcopt/vqc/cobyla.hpp"
#include "pqcopt/vqc/model.hpp"

namespace pqcopt {

struct TrainConfig {
    int max_evals = 100;
    int shots = 1024;
    std::uint64_t seed = 0;
    double rhobeg = 1.0;
    double rhoend = 1e-4;
};

struct TrainResult {
    VqcModel model;
    double initial_loss = 0.0;
    double final_loss = 0.0;
    int evals = 0;
};

/// theta0 ~ U[0, 2pi) from the seed, then COBYLA on the training loss. The
/// loss uses common random numbers, so the result is deterministic in the
/// seed and final_loss <= initial_loss.
TrainResult train(const VqcModel &model, const Dataset &train_data, const TrainConfig &cfg,
                  const Execution &exec);

} // namespace pqcopt
