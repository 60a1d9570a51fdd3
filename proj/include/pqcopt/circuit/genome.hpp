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
#include <vector>

namespace pqcopt {

/// Register width and the number of parameterized gate positions per wire.
struct DesignParams {
    int n_qubits = 4;
    int n_gates = 5;

    void validate() const;
    bool operator==(const DesignParams &) const = default;
};

/// One cell of the parameterized-gate grid. Controlled choices carry the
/// target qubit; the control is the cell's own wire.
struct GateChoice {
    enum class Kind : std::uint8_t { None, RX, RY, RZ, CRX, CRY, CRZ };

    Kind kind = Kind::None;
    int target = -1;

    bool is_controlled() const {
        return kind == Kind::CRX || kind == Kind::CRY || kind == Kind::CRZ;
    }
    bool operator==(const GateChoice &) const = default;
};

/// Number of distinct choices for a cell: None, three rotations, and three
/// controlled rotations towards each other qubit.
int gate_choice_count(int n_qubits);

/// Categorical code of a cell on wire `row`: 0 None, 1-3 RX/RY/RZ, then
/// 4 + 3*t + r for the t-th other qubit (ascending) and r in CRX/CRY/CRZ.
GateChoice gate_choice_from_code(int code, int row, int n_qubits);
int gate_choice_code(const GateChoice &choice, int row, int n_qubits);

std::string to_string(const GateChoice &choice);

/// Entanglement mask plus gate grid; the searchable description of an ansatz.
class AnsatzGenome {
  public:
    explicit AnsatzGenome(DesignParams design);

    const DesignParams &design() const { return design_; }

    bool entangled(int i, int j) const;
    void set_entangled(int i, int j, bool on);

    const GateChoice &choice(int qubit, int k) const;
    void set_choice(int qubit, int k, GateChoice choice);

    /// Throws std::invalid_argument if a mask diagonal entry is set or a
    /// controlled choice targets its own wire or an out-of-range qubit.
    void validate() const;

    bool operator==(const AnsatzGenome &) const = default;

  private:
    DesignParams design_;
    std::vector<std::uint8_t> mask_;
    std::vector<GateChoice> grid_;
};

} // namespace pqcopt
