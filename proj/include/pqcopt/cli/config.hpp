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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqcopt/bopt/tpe.hpp"
#include "pqcopt/circuit/genome.hpp"
#include "pqcopt/circuit/templates.hpp"
#include "pqcopt/data/dataset.hpp"

namespace pqcopt {

struct DatasetSpec {
    /// "iris", "synthetic" or "csv".
    std::string kind = "iris";
    /// CSV path for kind "csv"; optional fixture override for "iris".
    std::string path;
    std::uint64_t seed = 0;
    SyntheticConfig synthetic;
};

struct BaselineSweep {
    std::vector<TemplateName> templates{TemplateName::RealAmplitudes, TemplateName::EfficientSU2,
                                        TemplateName::PauliTwoDesign};
    std::vector<int> reps{1, 2, 3, 4, 5};
    std::vector<Entanglement> entanglements{Entanglement::Linear, Entanglement::ReverseLinear,
                                            Entanglement::Circular, Entanglement::Full};
};

struct RunConfig {
    enum class Mode { Ideal, Noisy, MultiObjective };

    DatasetSpec dataset;
    DesignParams design;
    Mode mode = Mode::Ideal;
    std::string backend;
    int trials = 600;
    int k = 10;
    double train_fraction = 0.7;
    int n_seeds = 5;
    int max_evals = 100;
    int shots = 1024;
    int parallelism = 1;
    std::string out = "run";
    std::uint64_t seed = 0;
    TpeConfig tpe;
    BaselineSweep baseline;
    /// search: also re-score the best circuit under the backend's noise.
    /// search-mo: re-score every front member under noise and select one.
    bool rescore_noisy = false;
    bool resume = false;
    bool force = false;

    /// Throws std::invalid_argument on a violated invariant.
    void validate() const;
};

std::string_view to_string(RunConfig::Mode mode);
RunConfig::Mode parse_mode(std::string_view s);

/// Unknown keys are rejected so typos do not silently fall back to defaults.
RunConfig config_from_json(const nlohmann::json &doc);
nlohmann::json config_to_json(const RunConfig &cfg);
RunConfig load_config(const std::filesystem::path &path);

/// Relative paths in a config resolve against the working directory first,
/// then the source tree (so bundled fixtures work from any build dir).
std::filesystem::path resolve_input_path(const std::string &path);

Dataset load_dataset(const DatasetSpec &spec);

} // namespace pqcopt
