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
#include <vector>

#include "pqcopt/circuit/circuit.hpp"
#include "pqcopt/qsim/statevector.hpp"
#include "pqcopt/transpile/backend.hpp"

namespace pqcopt {

/// Circuit rewritten onto the physical register of a backend.
struct TranspiledCircuit {
    Circuit circuit;
    int n_logical = 0;
    /// Final position of every virtual qubit: layout[v] is the physical qubit
    /// holding logical qubit v (v < n_logical) or ancilla v (v >= n_logical).
    std::vector<int> layout;
};

/// Rewrites a one-qubit gate into {RZ, SX, X}, eliding zero-angle RZ.
/// Angles that reference a slot stay symbolic.
std::vector<Gate> decompose_1q(const Gate &gate);

/// Rewrites a two-qubit gate into CX plus one-qubit gates (which may still
/// need decompose_1q). One-qubit gates pass through.
std::vector<Gate> decompose_cr(const Gate &gate);

/// Inserts SWAPs (as three CX) so every CX acts on a coupled pair, and
/// fixes CX direction with H conjugation. Expects only basis one-qubit
/// gates and CX. The layout starts as `initial_layout` (a permutation of
/// the physical qubits, logical qubits first) or the identity when empty.
TranspiledCircuit route(const Circuit &circuit, const BackendSnapshot &backend,
                        std::span<const int> initial_layout = {});

/// Local cleanup to a fixpoint: adjacent RZ on one wire merge when their
/// angles combine, constant RZ that are 0 mod 2*pi vanish, and adjacent
/// identical CX pairs cancel.
Circuit peephole(const Circuit &circuit);

/// decompose_cr -> decompose_1q -> route -> peephole. The result references
/// the same slots as the input and keeps its n_params.
TranspiledCircuit transpile(const Circuit &circuit, const BackendSnapshot &backend);

/// Sum of calibrated error rates over the circuit's gates. Throws if a gate
/// has no calibrated rate.
double complexity(const Circuit &physical, const BackendSnapshot &backend);

/// Logical state placed on the physical register according to `layout`,
/// with ancillas in |0>.
Statevector embed_logical(const Statevector &logical, std::span<const int> layout,
                          int n_physical);

/// Maps a physical measurement outcome back to the logical bit order.
std::uint64_t logical_outcome(std::uint64_t physical, std::span<const int> layout, int n_logical,
                              int n_physical);

} // namespace pqcopt
