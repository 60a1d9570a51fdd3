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

#include "pqcopt/circuit/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pqcopt {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

void Circuit::append(const Gate &gate) {
    validate_gate(gate, n_qubits_);
    if (gate.angle && !gate.angle->is_constant()) {
        n_params_ = std::max(n_params_, gate.angle->slot + 1);
    }
    gates_.push_back(gate);
}

void Circuit::append(const Circuit &other, int slot_offset) {
    if (other.n_qubits_ > n_qubits_) {
        throw std::invalid_argument("appended circuit is wider than the target register");
    }
    for (Gate g : other.gates_) {
        if (g.angle && !g.angle->is_constant()) {
            g.angle->slot += slot_offset;
        }
        append(g);
    }
    n_params_ = std::max(n_params_, other.n_params_ + slot_offset);
}

void Circuit::reserve_params(int n_params) {
    n_params_ = std::max(n_params_, n_params);
}

void Circuit::check_invariants() const {
    std::vector<bool> used(static_cast<std::size_t>(n_params_), false);
    for (const Gate &g : gates_) {
        validate_gate(g, n_qubits_);
        if (g.angle && !g.angle->is_constant()) {
            used[static_cast<std::size_t>(g.angle->slot)] = true;
        }
    }
    for (std::size_t s = 0; s < used.size(); ++s) {
        if (!used[s]) {
            throw std::logic_error("parameter slot " + std::to_string(s) + " is unused");
        }
    }
}

int Circuit::two_qubit_count() const {
    int count = 0;
    for (const Gate &g : gates_) {
        count += g.arity() == 2 ? 1 : 0;
    }
    return count;
}

Circuit bind_parameters(const Circuit &circuit, std::span<const double> params) {
    if (params.size() != static_cast<std::size_t>(circuit.n_params())) {
        throw std::invalid_argument("expected " + std::to_string(circuit.n_params()) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    Circuit bound(circuit.n_qubits());
    for (Gate g : circuit.gates()) {
        if (g.angle) {
            g.angle = Angle::constant(g.angle->bind(params));
        }
        bound.append(g);
    }
    return bound;
}

} // namespace pqcopt
