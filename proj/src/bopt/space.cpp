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

#include "pqcopt/bopt/space.hpp"

#include <stdexcept>

namespace pqcopt {

SearchSpace::SearchSpace(std::vector<Dimension> dims) : dims_(std::move(dims)) {
    for (const auto &d : dims_) {
        if (d.cardinality < 1) {
            throw std::invalid_argument("dimension " + d.name + " has no values");
        }
    }
}

bool SearchSpace::contains(std::span<const int> a) const {
    if (a.size() != dims_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] >= dims_[i].cardinality) {
            return false;
        }
    }
    return true;
}

std::vector<int> SearchSpace::random_assignment(Rng &rng) const {
    std::vector<int> a(dims_.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = static_cast<int>(uniform_index(rng, static_cast<std::size_t>(dims_[i].cardinality)));
    }
    return a;
}

SearchSpace genome_space(const DesignParams &design) {
    design.validate();
    const int n = design.n_qubits;
    std::vector<Dimension> dims;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                dims.push_back({"e_" + std::to_string(i) + "_" + std::to_string(j), 2});
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < design.n_gates; ++k) {
            dims.push_back({"p_" + std::to_string(i) + "_" + std::to_string(k),
                            gate_choice_count(n)});
        }
    }
    return SearchSpace(std::move(dims));
}

AnsatzGenome decode_genome(const DesignParams &design, std::span<const int> assignment) {
    if (!genome_space(design).contains(assignment)) {
        throw std::invalid_argument("assignment is outside the genome space");
    }
    AnsatzGenome g(design);
    const int n = design.n_qubits;
    std::size_t at = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                g.set_entangled(i, j, assignment[at++] != 0);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < design.n_gates; ++k) {
            g.set_choice(i, k, gate_choice_from_code(assignment[at++], i, n));
        }
    }
    return g;
}

std::vector<int> encode_genome(const AnsatzGenome &genome) {
    const DesignParams &d = genome.design();
    std::vector<int> a;
    for (int i = 0; i < d.n_qubits; ++i) {
        for (int j = 0; j < d.n_qubits; ++j) {
            if (i != j) {
                a.push_back(genome.entangled(i, j) ? 1 : 0);
            }
        }
    }
    for (int i = 0; i < d.n_qubits; ++i) {
        for (int k = 0; k < d.n_gates; ++k) {
            a.push_back(gate_choice_code(genome.choice(i, k), i, d.n_qubits));
        }
    }
    return a;
}

} // namespace pqcopt
