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

#include "pqcopt/circuit/genome.hpp"

#include <stdexcept>

namespace pqcopt {

void DesignParams::validate() const {
    if (n_qubits < 1 || n_gates < 1) {
        throw std::invalid_argument("design parameters must be at least 1");
    }
}

int gate_choice_count(int n_qubits) {
    return 4 + 3 * (n_qubits - 1);
}

GateChoice gate_choice_from_code(int code, int row, int n_qubits) {
    if (code < 0 || code >= gate_choice_count(n_qubits)) {
        throw std::out_of_range("gate choice code out of range");
    }
    if (code < 4) {
        return GateChoice{static_cast<GateChoice::Kind>(code), -1};
    }
    const int t = (code - 4) / 3;
    const int r = (code - 4) % 3;
    const int target = t < row ? t : t + 1;
    return GateChoice{static_cast<GateChoice::Kind>(4 + r), target};
}

int gate_choice_code(const GateChoice &choice, int row, int n_qubits) {
    if (!choice.is_controlled()) {
        return static_cast<int>(choice.kind);
    }
    if (choice.target == row || choice.target < 0 || choice.target >= n_qubits) {
        throw std::invalid_argument("invalid controlled-choice target");
    }
    const int t = choice.target < row ? choice.target : choice.target - 1;
    return 4 + 3 * t + (static_cast<int>(choice.kind) - 4);
}

std::string to_string(const GateChoice &choice) {
    switch (choice.kind) {
    case GateChoice::Kind::None:
        return "None";
    case GateChoice::Kind::RX:
        return "RX";
    case GateChoice::Kind::RY:
        return "RY";
    case GateChoice::Kind::RZ:
        return "RZ";
    case GateChoice::Kind::CRX:
        return "CRX" + std::to_string(choice.target);
    case GateChoice::Kind::CRY:
        return "CRY" + std::to_string(choice.target);
    case GateChoice::Kind::CRZ:
        return "CRZ" + std::to_string(choice.target);
    }
    return "?";
}

AnsatzGenome::AnsatzGenome(DesignParams design) : design_(design) {
    design_.validate();
    mask_.assign(static_cast<std::size_t>(design.n_qubits * design.n_qubits), 0);
    grid_.assign(static_cast<std::size_t>(design.n_qubits * design.n_gates), GateChoice{});
}

bool AnsatzGenome::entangled(int i, int j) const {
    return mask_.at(static_cast<std::size_t>(i * design_.n_qubits + j)) != 0;
}

void AnsatzGenome::set_entangled(int i, int j, bool on) {
    if (i == j && on) {
        throw std::invalid_argument("entanglement mask diagonal must stay zero");
    }
    if (i < 0 || j < 0 || i >= design_.n_qubits || j >= design_.n_qubits) {
        throw std::out_of_range("entanglement index out of range");
    }
    mask_[static_cast<std::size_t>(i * design_.n_qubits + j)] = on ? 1 : 0;
}

const GateChoice &AnsatzGenome::choice(int qubit, int k) const {
    return grid_.at(static_cast<std::size_t>(qubit * design_.n_gates + k));
}

void AnsatzGenome::set_choice(int qubit, int k, GateChoice choice) {
    if (qubit < 0 || k < 0 || qubit >= design_.n_qubits || k >= design_.n_gates) {
        throw std::out_of_range("grid index out of range");
    }
    if (choice.is_controlled()) {
        gate_choice_code(choice, qubit, design_.n_qubits); // validates the target
    } else {
        choice.target = -1;
    }
    grid_[static_cast<std::size_t>(qubit * design_.n_gates + k)] = choice;
}

void AnsatzGenome::validate() const {
    const int n = design_.n_qubits;
    for (int i = 0; i < n; ++i) {
        if (entangled(i, i)) {
            throw std::invalid_argument("entanglement mask diagonal must stay zero");
        }
        for (int k = 0; k < design_.n_gates; ++k) {
            const GateChoice &c = choice(i, k);
            if (c.is_controlled()) {
                gate_choice_code(c, i, n);
            }
        }
    }
}

} // namespace pqcopt
