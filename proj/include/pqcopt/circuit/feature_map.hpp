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

#include <span>
#include <vector>

#include "pqcopt/circuit/circuit.hpp"

namespace pqcopt {

/// ZZ feature map with one repetition: H on every qubit, RZ(2 x_i) on qubit
/// i, then for every pair i < j (lexicographic) CX(i,j), RZ(2 (pi-x_i)(pi-x_j))
/// on j, CX(i,j). One qubit per feature; no trainable slots.
Circuit zz_feature_map(std::span<const double> x);

/// The same gate layout with every data-dependent angle left as a slot, in
/// gate order: n single-qubit angles first, then one per pair. Binding it
/// with zz_feature_angles(x) reproduces zz_feature_map(x).
Circuit zz_feature_map_template(int n_qubits);

std::vector<double> zz_feature_angles(std::span<const double> x);

} // namespace pqcopt
