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

#include "pqcopt/circuit/feature_map.hpp"

#include <numbers>
#include <stdexcept>

namespace pqcopt {

Circuit zz_feature_map_template(int n_qubits) {
    Circuit c(n_qubits);
    for (int q = 0; q < n_qubits; ++q) {
        c.append(Gate::one(GateKind::H, q));
    }
    int slot = 0;
    for (int q = 0; q < n_qubits; ++q) {
        c.append(Gate::rotation(GateKind::RZ, q, Angle::param(slot++)));
    }
    for (int i = 0; i < n_qubits; ++i) {
        for (int j = i + 1; j < n_qubits; ++j) {
            c.append(Gate::two(GateKind::CX, i, j));
            c.append(Gate::rotation(GateKind::RZ, j, Angle::param(slot++)));
            c.append(Gate::two(GateKind::CX, i, j));
        }
    }
    return c;
}

std::vector<double> zz_feature_angles(std::span<const double> x) {
    const double pi = std::numbers::pi;
    const std::size_t n = x.size();
    std::vector<double> angles;
    angles.reserve(n + n * (n - 1) / 2);
    for (double v : x) {
        angles.push_back(2.0 * v);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            angles.push_back(2.0 * (pi - x[i]) * (pi - x[j]));
        }
    }
    return angles;
}

Circuit zz_feature_map(std::span<const double> x) {
    if (x.empty()) {
        throw std::invalid_argument("feature vector is empty");
    }
    const Circuit templ = zz_feature_map_template(static_cast<int>(x.size()));
    return bind_parameters(templ, zz_feature_angles(x));
}

} // namespace pqcopt
