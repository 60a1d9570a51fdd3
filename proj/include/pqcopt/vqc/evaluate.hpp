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
#include <vector>

#include "json.hpp"
#include "pqcopt/vqc/train.hpp"

namespace pqcopt {

struct EvalConfig {
    int k = 10;
    double train_fraction = 0.7;
    int n_seeds = 5;
    int max_evals = 100;
    int shots = 1024;
    /// Splits depend only on this seed, so every ansatz evaluated with the
    /// same seed sees the same folds.
    std::uint64_t seed = 0;
    /// OpenMP threads across (fold, seed) jobs.
    int parallelism = 1;
};

struct EvalReport {
    std::string dataset;
    std::string ansatz_id;
    std::string mode;
    int k = 0;
    int n_seeds = 0;
    /// Seed-major: accuracies[s * k + f].
    std::vector<double> accuracies;
    double mean = 0.0;
    /// Population standard deviation of `accuracies`.
    double std = 0.0;
    std::vector<double> seed_means;

    /// Recomputes mean, std and seed_means from `accuracies`.
    void finalize();

    nlohmann::json to_json() const;
    static EvalReport from_json(const nlohmann::json &doc);
    static std::string csv_header();
    std::string csv_row() const;
};

/// k stratified random splits (train_fraction / rest), each trained and
/// scored n_seeds times; features are min-max scaled to [0, pi] on the
/// training rows of each split. Jobs run in parallel, results land in fixed
/// slots, so the report does not depend on scheduling.
EvalReport kfold_evaluate(const VqcModel &prototype, const Dataset &data, const EvalConfig &cfg,
                          const Execution &exec);

/// Same with the ZZ feature map over the dataset's features.
EvalReport kfold_evaluate(const Circuit &ansatz, const Dataset &data, const EvalConfig &cfg,
                          const Execution &exec);

double mean(std::span<const double> xs);
/// Population (ddof = 0) standard deviation.
double stddev(std::span<const double> xs);

/// Effect size with the (n - 1)-weighted pooled standard deviation.
/// Returns 0 for equal means with zero spread; throws std::domain_error on
/// zero pooled spread otherwise, std::invalid_argument if a sample has < 2.
double cohens_d(std::span<const double> a, std::span<const double> b);

} // namespace pqcopt
