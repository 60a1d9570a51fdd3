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

#include "pqcopt/circuit/templates.hpp"

#include <numbers>
#include <stdexcept>

#include "pqcopt/common/random.hpp"

namespace pqcopt {

std::string_view to_string(TemplateName name) {
    switch (name) {
    case TemplateName::RealAmplitudes:
        return "RealAmplitudes";
    case TemplateName::EfficientSU2:
        return "EfficientSU2";
    case TemplateName::PauliTwoDesign:
        return "PauliTwoDesign";
    }
    return "?";
}

std::string_view to_string(Entanglement ent) {
    switch (ent) {
    case Entanglement::Linear:
        return "linear";
    case Entanglement::ReverseLinear:
        return "reverse_linear";
    case Entanglement::Circular:
        return "circular";
    case Entanglement::Full:
        return "full";
    case Entanglement::Builtin:
        return "builtin";
    }
    return "?";
}

TemplateName parse_template_name(std::string_view s) {
    for (auto n : {TemplateName::RealAmplitudes, TemplateName::EfficientSU2,
                   TemplateName::PauliTwoDesign}) {
        if (s == to_string(n)) {
            return n;
        }
    }
    throw std::invalid_argument("unknown template '" + std::string(s) + "'");
}

Entanglement parse_entanglement(std::string_view s) {
    for (auto e : {Entanglement::Linear, Entanglement::ReverseLinear, Entanglement::Circular,
                   Entanglement::Full, Entanglement::Builtin}) {
        if (s == to_string(e)) {
            return e;
        }
    }
    throw std::invalid_argument("unknown entanglement '" + std::string(s) + "'");
}

std::vector<std::pair<int, int>> entanglement_pairs(Entanglement ent, int n) {
    std::vector<std::pair<int, int>> pairs;
    switch (ent) {
    case Entanglement::Linear:
        for (int i = 0; i + 1 < n; ++i) {
            pairs.emplace_back(i, i + 1);
        }
        break;
    case Entanglement::ReverseLinear:
        for (int i = n - 2; i >= 0; --i) {
            pairs.emplace_back(i, i + 1);
        }
        break;
    case Entanglement::Circular:
        if (n > 2) {
            pairs.emplace_back(n - 1, 0);
        }
        for (int i = 0; i + 1 < n; ++i) {
            pairs.emplace_back(i, i + 1);
        }
        break;
    case Entanglement::Full:
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                pairs.emplace_back(i, j);
            }
        }
        break;
    case Entanglement::Builtin:
        throw std::invalid_argument("builtin entanglement has no generic pair list");
    }
    return pairs;
}

Circuit template_circuit(TemplateName name, int n_qubits, int reps, Entanglement ent,
                         std::uint64_t seed) {
    if (reps < 0) {
        throw std::invalid_argument("reps must be non-negative");
    }
    if ((ent == Entanglement::Builtin) != (name == TemplateName::PauliTwoDesign)) {
        throw std::invalid_argument(std::string(to_string(name)) + " does not support " +
                                    std::string(to_string(ent)) + " entanglement");
    }
    Circuit c(n_qubits);
    int slot = 0;
    auto rotation_layer = [&](GateKind kind) {
        for (int q = 0; q < n_qubits; ++q) {
            c.append(Gate::rotation(kind, q, Angle::param(slot++)));
        }
    };

    switch (name) {
    case TemplateName::RealAmplitudes:
    case TemplateName::EfficientSU2: {
        const bool su2 = name == TemplateName::EfficientSU2;
        const auto pairs = entanglement_pairs(ent, n_qubits);
        for (int r = 0; r <= reps; ++r) {
            if (r > 0) {
                for (auto [a, b] : pairs) {
                    c.append(Gate::two(GateKind::CX, a, b));
                }
            }
            rotation_layer(GateKind::RY);
            if (su2) {
                rotation_layer(GateKind::RZ);
            }
        }
        break;
    }
    case TemplateName::PauliTwoDesign: {
        Rng rng(seed);
        constexpr GateKind axes[] = {GateKind::RX, GateKind::RY, GateKind::RZ};
        auto random_layer = [&] {
            for (int q = 0; q < n_qubits; ++q) {
                c.append(Gate::rotation(axes[uniform_index(rng, 3)], q, Angle::param(slot++)));
            }
        };
        for (int q = 0; q < n_qubits; ++q) {
            c.append(Gate::rotation(GateKind::RY, q, Angle::constant(std::numbers::pi / 4.0)));
        }
        for (int r = 0; r < reps; ++r) {
            random_layer();
            for (int start = 0; start < 2; ++start) {
                for (int q = start; q + 1 < n_qubits; q += 2) {
                    c.append(Gate::two(GateKind::CZ, q, q + 1));
                }
            }
        }
        random_layer();
        break;
    }
    }
    return c;
}

} // namespace pqcopt
