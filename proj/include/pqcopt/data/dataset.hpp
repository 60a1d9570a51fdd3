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
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pqcopt/common/random.hpp"

namespace pqcopt {

struct Dataset {
    std::string name;
    std::vector<std::vector<double>> features;
    std::vector<int> labels;
    int n_classes = 0;

    std::size_t size() const { return labels.size(); }
    std::size_t n_features() const { return features.empty() ? 0 : features.front().size(); }

    /// Row counts match, widths uniform, labels in range, every class
    /// present, values finite. Throws std::invalid_argument.
    void validate() const;

    std::map<int, std::size_t> class_histogram() const;

    Dataset subset(std::span<const std::size_t> rows) const;
};

/// Knobs of the synthetic generator that the defaults pin down.
struct SyntheticConfig {
    int n_samples = 1000;
    double majority_fraction = 0.65;
    /// Half the side of the square whose vertices hold the cluster centres.
    double class_sep = 0.4;
    /// Std of the Gaussian noise added to each redundant feature.
    double redundant_noise = 0.1;
    /// Fraction of labels reassigned at random.
    double flip_fraction = 0.0;
};

/// Two informative features: unit-variance Gaussian clusters at the four
/// vertices (+-class_sep)^2, class 0 on the (-,-),(+,+) diagonal and class 1
/// on the other, with each class split evenly between its two vertices.
/// Two redundant features are random linear combinations of the informative
/// ones plus noise. Rows are shuffled. Pure function of (seed, cfg).
Dataset gen_synthetic(std::uint64_t seed, const SyntheticConfig &cfg = {});

std::filesystem::path default_iris_path();

/// Iris fixture: 150 x 4, Setosa=0, Versicolour=1, Virginica=2.
Dataset load_iris(const std::filesystem::path &path = default_iris_path());

/// CSV with header f0..f{n-1},label. n_classes is max label + 1.
Dataset read_csv(const std::filesystem::path &path, const std::string &name = "");
void write_csv(const Dataset &ds, const std::filesystem::path &path);

struct ScalingParams {
    double lo = 0.0;
    double hi = std::numbers::pi;
    std::vector<double> min;
    std::vector<double> max;

    /// Affine map of [min, max] onto [lo, hi], clamped; a constant feature maps
    /// to the midpoint.
    std::vector<double> apply(std::span<const double> row) const;
};

ScalingParams fit_scaling(const Dataset &ds, std::span<const std::size_t> fit_rows,
                          double lo = 0.0, double hi = std::numbers::pi);

/// Fits on `fit_rows` only and transforms every row.
std::pair<Dataset, ScalingParams> scale_features(const Dataset &ds,
                                                 std::span<const std::size_t> fit_rows,
                                                 double lo = 0.0,
                                                 double hi = std::numbers::pi);

/// Stratified random split: round(train_fraction * class size) rows of each
/// class go to training. Both index lists are sorted.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
stratified_split(std::span<const int> labels, double train_fraction, Rng &rng);

} // namespace pqcopt
