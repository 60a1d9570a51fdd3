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

#include <random>

#include "pqcopt/circuit/ansatz.hpp"
#include "pqcopt/circuit/genome.hpp"

namespace fixtures {

// Uniform over entanglement bits and gate codes.
inline pqcopt::AnsatzGenome random_genome(const pqcopt::DesignParams &d, std::mt19937_64 &rng) {
    pqcopt::AnsatzGenome g(d);
    for (int i = 0; i < d.n_qubits; ++i) {
        for (int j = 0; j < d.n_qubits; ++j) {
            if (i != j) {
                g.set_entangled(i, j, rng() % 2 == 1);
            }
        }
    }
    const int choices = pqcopt::gate_choice_count(d.n_qubits);
    for (int q = 0; q < d.n_qubits; ++q) {
        for (int k = 0; k < d.n_gates; ++k) {
            g.set_choice(q, k, pqcopt::gate_choice_from_code(static_cast<int>(rng() % choices), q, d.n_qubits));
        }
    }
    return g;
}

} // namespace fixtures
