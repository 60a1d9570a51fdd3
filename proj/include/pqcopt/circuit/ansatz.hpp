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

#include <vector>

#include "pqcopt/circuit/circuit.hpp"
#include "pqcopt/circuit/genome.hpp"

namespace pqcopt {

/// Emits the entanglement block (H(i), CX(i,j) for every set e_ij,
/// row-major) followed by the gate grid column by column, each cell taking
/// a fresh trainable slot. Post-processing is not applied.
Circuit build_ansatz(const AnsatzGenome &genome);

struct PostprocessResult {
    Circuit circuit;
    /// For every slot of the input circuit, the slot that now carries it, or
    /// -1 if it was absorbed by a merge or removed (the dropped angle can be
    /// bound to zero in the original without changing the output).
    std::vector<int> slot_map;
};

/// Simplifies an ansatz that is measured in Z at the end, to a fixpoint:
///  1. consecutive same-kind simple rotations on one wire, with no gate on
///     that wire in between, merge into the first one's slot;
///  2. an RZ that is the last gate on its wire is dropped.
/// Slots are renumbered contiguously.
PostprocessResult postprocess_with_map(const Circuit &circuit);

Circuit postprocess(const Circuit &circuit);

} // namespace pqcopt
