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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqcopt/circuit/circuit.hpp"

namespace pqcopt {

enum class TemplateName { RealAmplitudes, EfficientSU2, PauliTwoDesign };
enum class Entanglement { Linear, ReverseLinear, Circular, Full, Builtin };

std::string_view to_string(TemplateName name);
std::string_view to_string(Entanglement ent);
TemplateName parse_template_name(std::string_view s);
Entanglement parse_entanglement(std::string_view s);

/// CX pairs of one entangling layer, in emission order.
std::vector<std::pair<int, int>> entanglement_pairs(Entanglement ent, int n_qubits);

/// Baseline ansatz templates:
///   RealAmplitudes  RY layer, then reps x (CX layer, RY layer)
///   EfficientSU2    RY+RZ layer, then reps x (CX layer, RY+RZ layer)
///   PauliTwoDesign  fixed RY(pi/4) layer, then reps x (random-axis rotation
///                   layer, two-deep pairwise CZ layer), then a final
///                   random-axis rotation layer; axes come from `seed`.
/// `Builtin` entanglement is required for PauliTwoDesign and rejected for the
/// others.
Circuit template_circuit(TemplateName name, int n_qubits, int reps, Entanglement ent,
                         std::uint64_t seed = 0);

} // namespace pqcopt
