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
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "pqcopt/circuit/circuit.hpp"
#include "pqcopt/data/dataset.hpp"
#include "pqcopt/qsim/noise.hpp"
#include "pqcopt/transpile/backend.hpp"
#include "pqcopt/transpile/transpile.hpp"

namespace pqcopt {

/// Data encoder as a circuit template whose slots carry data-dependent
/// angles, so the composed circuit can be transpiled once and re-bound per
/// sample.
class FeatureMap {
  public:
    using AngleFn = std::function<std::vector<double>(std::span<const double>)>;

    FeatureMap(Circuit tmpl, AngleFn angles);

    /// ZZ map with one qubit per feature.
    static FeatureMap zz(int n_qubits);
    /// Data-independent preparation (tests, trivial classifiers).
    static FeatureMap fixed(Circuit circuit);

    const Circuit &circuit_template() const { return template_; }
    int n_qubits() const { return template_.n_qubits(); }
    std::vector<double> angles(std::span<const double> x) const;

  private:
    Circuit template_;
    AngleFn angles_;
};

struct Execution {
    enum class Mode { Ideal, Noisy };
    Mode mode = Mode::Ideal;
    std::shared_ptr<const BackendSnapshot> backend;

    static Execution ideal() { return {}; }
    static Execution noisy(std::shared_ptr<const BackendSnapshot> backend);
    bool is_noisy() const { return mode == Mode::Noisy; }
};

/// Composed circuit transpiled for one backend, with its noise model.
struct NoisyProgram {
    const BackendSnapshot *backend = nullptr;
    TranspiledCircuit transpiled;
    NoiseModel noise;
};

/// Feature map followed by a trainable ansatz. Outcome bitstrings map to
/// classes by integer value mod n_classes.
class VqcModel {
  public:
    VqcModel(FeatureMap feature_map, Circuit ansatz, int n_classes);

    const FeatureMap &feature_map() const { return feature_map_; }
    const Circuit &ansatz() const { return ansatz_; }
    int n_classes() const { return n_classes_; }
    int n_qubits() const { return composed_.n_qubits(); }
    std::span<const double> theta() const { return theta_; }
    void set_theta(std::vector<double> theta);

    /// Feature-map template then ansatz; slots 0..n_theta-1 are the ansatz
    /// parameters, the rest are data slots.
    const Circuit &composed() const { return composed_; }

    /// theta followed by the feature angles of x.
    std::vector<double> bind(std::span<const double> theta, std::span<const double> x) const;

    /// Transpiles the composed circuit for `backend` on first use. The cache
    /// is per model copy; copies used concurrently must each warm their own.
    const NoisyProgram &noisy_program(const BackendSnapshot &backend) const;

  private:
    FeatureMap feature_map_;
    Circuit ansatz_;
    int n_classes_;
    Circuit composed_;
    std::vector<double> theta_;
    mutable std::shared_ptr<const NoisyProgram> noisy_;
};

/// Class probabilities from `shots` samples, using `theta` in place of the
/// model's parameters.
std::vector<double> predict_proba(const VqcModel &model, std::span<const double> theta,
                                  std::span<const double> x, int shots, std::uint64_t seed,
                                  const Execution &exec);

std::vector<double> predict_proba(const VqcModel &model, std::span<const double> x, int shots,
                                  std::uint64_t seed, const Execution &exec);

/// Mean cross-entropy with probabilities clamped to [1e-10, 1]. Sample i is
/// drawn with derive_seed(seed, {i}) so the loss is a deterministic function
/// of theta (common random numbers across optimizer steps).
double loss(const VqcModel &model, std::span<const double> theta, const Dataset &data, int shots,
            std::uint64_t seed, const Execution &exec);

double loss(const VqcModel &model, const Dataset &data, int shots, std::uint64_t seed,
            const Execution &exec);

/// Mean cross-entropy of precomputed probability rows.
double cross_entropy(std::span<const std::vector<double>> probs, std::span<const int> labels);

/// Fraction of rows whose argmax class (lowest index on ties) is the label.
double accuracy(const VqcModel &model, const Dataset &data, int shots, std::uint64_t seed,
                const Execution &exec);

/// Sum of calibrated gate errors of the composed circuit once transpiled.
double model_complexity(const VqcModel &model, const BackendSnapshot &backend);

} // namespace pqcopt
