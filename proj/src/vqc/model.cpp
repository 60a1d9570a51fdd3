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

#include "pqcopt/vqc/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pqcopt/circuit/feature_map.hpp"
#include "pqcopt/qsim/sampling.hpp"
#include "pqcopt/qsim/statevector.hpp"

namespace pqcopt {

FeatureMap::FeatureMap(Circuit tmpl, AngleFn angles)
    : template_(std::move(tmpl)), angles_(std::move(angles)) {}

FeatureMap FeatureMap::zz(int n_qubits) {
    return FeatureMap(zz_feature_map_template(n_qubits), [n_qubits](std::span<const double> x) {
        if (static_cast<int>(x.size()) != n_qubits) {
            throw std::invalid_argument("feature vector length " + std::to_string(x.size()) +
                                        " does not match " + std::to_string(n_qubits) +
                                        " qubits");
        }
        return zz_feature_angles(x);
    });
}

FeatureMap FeatureMap::fixed(Circuit circuit) {
    if (circuit.n_params() != 0) {
        throw std::invalid_argument("fixed feature map must not have slots");
    }
    return FeatureMap(std::move(circuit), [](std::span<const double>) {
        return std::vector<double>{};
    });
}

std::vector<double> FeatureMap::angles(std::span<const double> x) const {
    auto a = angles_(x);
    if (static_cast<int>(a.size()) != template_.n_params()) {
        throw std::logic_error("feature map produced the wrong number of angles");
    }
    return a;
}

Execution Execution::noisy(std::shared_ptr<const BackendSnapshot> backend) {
    if (!backend) {
        throw std::invalid_argument("noisy execution needs a backend snapshot");
    }
    return Execution{Mode::Noisy, std::move(backend)};
}

VqcModel::VqcModel(FeatureMap feature_map, Circuit ansatz, int n_classes)
    : feature_map_(std::move(feature_map)), ansatz_(std::move(ansatz)), n_classes_(n_classes) {
    if (n_classes < 2) {
        throw std::invalid_argument("a classifier needs at least 2 classes");
    }
    const int n = feature_map_.n_qubits();
    if (ansatz_.n_qubits() != n) {
        throw std::invalid_argument("ansatz width " + std::to_string(ansatz_.n_qubits()) +
                                    " does not match feature map width " + std::to_string(n));
    }
    if ((std::uint64_t{1} << n) < static_cast<std::uint64_t>(n_classes)) {
        throw std::invalid_argument("too few qubits for the number of classes");
    }
    const int n_theta = ansatz_.n_params();
    composed_ = Circuit(n);
    composed_.append(feature_map_.circuit_template(), n_theta);
    composed_.append(ansatz_);
    composed_.reserve_params(n_theta + feature_map_.circuit_template().n_params());
    theta_.assign(static_cast<std::size_t>(n_theta), 0.0);
}

void VqcModel::set_theta(std::vector<double> theta) {
    if (theta.size() != static_cast<std::size_t>(ansatz_.n_params())) {
        throw std::invalid_argument("theta has " + std::to_string(theta.size()) +
                                    " entries; ansatz has " +
                                    std::to_string(ansatz_.n_params()) + " slots");
    }
    theta_ = std::move(theta);
}

std::vector<double> VqcModel::bind(std::span<const double> theta, std::span<const double> x) const {
    if (theta.size() != static_cast<std::size_t>(ansatz_.n_params())) {
        throw std::invalid_argument("parameter binding mismatch: got " +
                                    std::to_string(theta.size()) + " angles for " +
                                    std::to_string(ansatz_.n_params()) + " slots");
    }
    std::vector<double> params(theta.begin(), theta.end());
    auto fa = feature_map_.angles(x);
    params.insert(params.end(), fa.begin(), fa.end());
    return params;
}

const NoisyProgram &VqcModel::noisy_program(const BackendSnapshot &backend) const {
    if (!noisy_ || noisy_->backend != &backend) {
        noisy_ = std::make_shared<NoisyProgram>(
            NoisyProgram{&backend, transpile(composed_, backend), noise_model(backend)});
    }
    return *noisy_;
}

std::vector<double> predict_proba(const VqcModel &model, std::span<const double> theta,
                                  std::span<const double> x, int shots, std::uint64_t seed,
                                  const Execution &exec) {
    const auto params = model.bind(theta, x);
    const auto k = static_cast<std::size_t>(model.n_classes());
    std::vector<double> counts(k, 0.0);
    if (exec.is_noisy()) {
        const NoisyProgram &prog = model.noisy_program(*exec.backend);
        const auto &tc = prog.transpiled;
        const int n_phys = tc.circuit.n_qubits();
        auto hist = run_noisy_histogram(tc.circuit, params, prog.noise, shots, seed);
        for (std::uint64_t i = 0; i < hist.size(); ++i) {
            if (hist[i] != 0) {
                const auto logical = logical_outcome(i, tc.layout, tc.n_logical, n_phys);
                counts[logical % k] += static_cast<double>(hist[i]);
            }
        }
    } else {
        Statevector psi = run_statevector(model.composed(), params);
        Rng rng(seed);
        auto hist = sample_histogram(psi, shots, rng);
        for (std::uint64_t i = 0; i < hist.size(); ++i) {
            counts[i % k] += static_cast<double>(hist[i]);
        }
    }
    for (double &c : counts) {
        c /= static_cast<double>(shots);
    }
    return counts;
}

std::vector<double> predict_proba(const VqcModel &model, std::span<const double> x, int shots,
                                  std::uint64_t seed, const Execution &exec) {
    return predict_proba(model, model.theta(), x, shots, seed, exec);
}

double cross_entropy(std::span<const std::vector<double>> probs, std::span<const int> labels) {
    if (probs.size() != labels.size() || probs.empty()) {
        throw std::invalid_argument("cross_entropy: size mismatch or empty input");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double p = std::clamp(probs[i].at(static_cast<std::size_t>(labels[i])), 1e-10, 1.0);
        total -= std::log(p);
    }
    return total / static_cast<double>(probs.size());
}

double loss(const VqcModel &model, std::span<const double> theta, const Dataset &data, int shots,
            std::uint64_t seed, const Execution &exec) {
    std::vector<std::vector<double>> probs;
    probs.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        probs.push_back(
            predict_proba(model, theta, data.features[i], shots, derive_seed(seed, {i}), exec));
    }
    return cross_entropy(probs, data.labels);
}

double loss(const VqcModel &model, const Dataset &data, int shots, std::uint64_t seed,
            const Execution &exec) {
    return loss(model, model.theta(), data, shots, seed, exec);
}

double accuracy(const VqcModel &model, const Dataset &data, int shots, std::uint64_t seed,
                const Execution &exec) {
    if (data.size() == 0) {
        throw std::invalid_argument("accuracy of an empty dataset");
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        auto p = predict_proba(model, data.features[i], shots, derive_seed(seed, {i}), exec);
        const auto best = std::max_element(p.begin(), p.end()) - p.begin();
        correct += best == data.labels[i] ? 1 : 0;
    }
    return static_cast<double>(correct) / static_cast<double>(data.size());
}

double model_complexity(const VqcModel &model, const BackendSnapshot &backend) {
    return complexity(model.noisy_program(backend).transpiled.circuit, backend);
}

} // namespace pqcopt
