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

#include "json.hpp"

#include "pqcopt/circuit/circuit.hpp"
#include "pqcopt/circuit/genome.hpp"

namespace pqcopt {

/// {"format":1,"n_qubits":N,"n_params":P,"gates":[{"kind":"RX","qubits":[0],
/// "slot":0}, {"kind":"RZ","qubits":[1],"angle":0.5}, ...]}. Affine angles
/// also carry "coeff" and "offset".
nlohmann::json circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const nlohmann::json &doc);

nlohmann::json genome_to_json(const AnsatzGenome &genome);

} // namespace pqcopt
