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

#include "pqcopt/qsim/gate.hpp"

namespace pqcopt {

/// Ordered gate list over a fixed register. Trainable slots referenced by
/// gate angles are numbered 0..n_params-1.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    int n_params() const { return n_params_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Validates the gate against the register and extends n_params to cover
    /// its slot, if any.
    void append(const Gate &gate);

    /// Appends every gate of `other` with its slots shifted by `slot_offset`.
    void append(const Circuit &other, int slot_offset = 0);

    /// Raises n_params (slots that no gate references are allowed while a
    /// circuit is under construction; check_invariants rejects them).
    void reserve_params(int n_params);

    /// Throws std::logic_error unless every slot in 0..n_params-1 is used.
    void check_invariants() const;

    /// Number of two-qubit gates.
    int two_qubit_count() const;

    bool operator==(const Circuit &) const = default;

  private:
    int n_qubits_ = 0;
    int n_params_ = 0;
    std::vector<Gate> gates_;
};

/// Copy of `circuit` with every angle bound to a constant.
Circuit bind_parameters(const Circuit &circuit, std::span<const double> params);

} // namespace pqcopt
