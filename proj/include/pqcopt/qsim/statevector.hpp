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

#include "pqcopt/common/random.hpp"
#include "pqcopt/qsim/gate.hpp"

namespace pqcopt {

class Circuit;

/// Dense 2^n amplitude vector; qubit 0 is the most significant index bit.
class Statevector {
  public:
    /// |0...0> on `n_qubits` qubits.
    explicit Statevector(int n_qubits);

    /// Takes ownership of `amps`; size must be a power of two and the norm 1
    /// within 1e-10.
    static Statevector from_amplitudes(std::vector<cplx> amps);

    /// Computational basis state |index>.
    static Statevector basis(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;
    std::vector<double> probabilities() const;

    /// Applies `gate` in place. Rotation angles bind against `params`. RESET
    /// draws its measurement outcome from `rng`; without one it is only
    /// accepted when the outcome is certain.
    void apply(const Gate &gate, std::span<const double> params = {}, Rng *rng = nullptr);

    /// Pauli X/Y/Z (0/1/2) on qubit q.
    void apply_pauli(int pauli, int q);

  private:
    Statevector(int n_qubits, std::vector<cplx> amps);

    int n_qubits_;
    std::vector<cplx> amps_;
};

/// Value-semantics wrapper around Statevector::apply.
Statevector apply_gate(Statevector state, const Gate &gate, std::span<const double> params = {},
                       Rng *rng = nullptr);

/// Applies the circuit's gates in order to `input`. `bound_params` must have
/// exactly circuit.n_params() entries.
Statevector run_statevector(const Circuit &circuit, std::span<const double> bound_params,
                            Statevector input, Rng *rng = nullptr);

/// Same, starting from |0...0>.
Statevector run_statevector(const Circuit &circuit, std::span<const double> bound_params);

/// |<a|b>|.
double overlap(const Statevector &a, const Statevector &b);

} // namespace pqcopt
