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

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pqcopt/qsim/gate.hpp"
#include "pqcopt/qsim/noise.hpp"

namespace pqcopt {

/// Static description of a simulated device: connectivity, native gates,
/// calibrated error rates. Immutable once loaded.
struct BackendSnapshot {
    std::string name;
    int n_qubits = 0;
    /// Directed pairs on which CX is native.
    std::set<std::pair<int, int>> coupling_map;
    std::set<GateKind> basis_gates;
    std::map<GateKey, double> gate_errors;
    std::vector<double> readout_errors;

    bool coupled(int control, int target) const {
        return coupling_map.contains({control, target});
    }
    bool adjacent(int a, int b) const { return coupled(a, b) || coupled(b, a); }

    /// Error rate of `gate` on its physical qubits; ID and RESET default to 0.
    std::optional<double> gate_error(const Gate &gate) const;

    /// Throws std::invalid_argument on any invariant violation.
    void validate() const;
};

/// Parses and validates a snapshot document:
/// {"format":1,"name":str,"n_qubits":int,"coupling_map":[[int,int],...],
///  "basis_gates":[str,...],"gate_errors":[{"gate":str,"qubits":[int,...],
///  "error":float},...],"readout_errors":[float,...]}
BackendSnapshot load_backend_snapshot(const nlohmann::json &doc);
BackendSnapshot load_backend_snapshot(const std::filesystem::path &path);

nlohmann::json backend_to_json(const BackendSnapshot &snapshot);

/// Location of a snapshot bundled under backends/ in the source tree.
std::filesystem::path bundled_backend_path(std::string_view name);

/// Trajectory noise model carrying the snapshot's gate and readout errors.
NoiseModel noise_model(const BackendSnapshot &snapshot);

} // namespace pqcopt
