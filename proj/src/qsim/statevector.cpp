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

#include "pqcopt/qsim/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pqcopt/circuit/circuit.hpp"
#include "pqcopt/qsim/kernels.hpp"

namespace pqcopt {
namespace {

constexpr int kMaxQubits = 24;

void check_width(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("unsupported register width " + std::to_string(n_qubits));
    }
}

} // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    check_width(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

Statevector::Statevector(int n_qubits, std::vector<cplx> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

Statevector Statevector::from_amplitudes(std::vector<cplx> amps) {
    int n = 0;
    while ((std::size_t{1} << n) < amps.size()) {
        ++n;
    }
    if (amps.empty() || (std::size_t{1} << n) != amps.size()) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    check_width(n);
    Statevector sv(n, std::move(amps));
    if (std::abs(sv.norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return sv;
}

Statevector Statevector::basis(int n_qubits, std::uint64_t index) {
    Statevector sv(n_qubits);
    if (index >= sv.dim()) {
        throw std::invalid_argument("basis index out of range");
    }
    sv.amps_[0] = 0.0;
    sv.amps_[index] = 1.0;
    return sv;
}

double Statevector::norm_squared() const {
    double s = 0.0;
    for (const cplx &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

void Statevector::apply(const Gate &gate, std::span<const double> params, Rng *rng) {
    validate_gate(gate, n_qubits_);
    const int q0 = gate.qubits[0];
    const int q1 = gate.qubits[1];
    switch (gate.kind) {
    case GateKind::ID:
        return;
    case GateKind::H:
    case GateKind::X:
    case GateKind::SX:
        kernels::apply_1q(amps_, n_qubits_, q0, gate_matrix(gate.kind));
        return;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        kernels::apply_1q(amps_, n_qubits_, q0, gate_matrix(gate.kind, gate.angle->bind(params)));
        return;
    case GateKind::CX:
    case GateKind::CZ:
        kernels::apply_controlled_1q(amps_, n_qubits_, q0, q1, gate_matrix(gate.kind));
        return;
    case GateKind::CRX:
    case GateKind::CRY:
    case GateKind::CRZ:
        kernels::apply_controlled_1q(amps_, n_qubits_, q0, q1,
                                     gate_matrix(gate.kind, gate.angle->bind(params)));
        return;
    case GateKind::SWAP:
        kernels::apply_swap(amps_, n_qubits_, q0, q1);
        return;
    case GateKind::RESET: {
        const double p1 = kernels::prob_one(amps_, n_qubits_, q0);
        bool one;
        if (p1 <= 1e-15) {
            one = false;
        } else if (p1 >= 1.0 - 1e-15) {
            one = true;
        } else {
            if (rng == nullptr) {
                throw std::invalid_argument("RESET on a superposed qubit needs a random source");
            }
            one = uniform01(*rng) < p1;
        }
        // Project onto the observed outcome, renormalize, then flip back to |0>.
        const std::uint64_t bit = std::uint64_t{1} << (n_qubits_ - 1 - q0);
        const double scale = 1.0 / std::sqrt(one ? p1 : 1.0 - p1);
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
            const bool is_one = (i & bit) != 0;
            amps_[i] = is_one == one ? amps_[i] * scale : cplx{0.0, 0.0};
        }
        if (one) {
            kernels::apply_1q(amps_, n_qubits_, q0, gate_matrix(GateKind::X));
        }
        return;
    }
    }
}

void Statevector::apply_pauli(int pauli, int q) {
    static const Mat2 y{0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0};
    switch (pauli) {
    case 0:
        kernels::apply_1q(amps_, n_qubits_, q, gate_matrix(GateKind::X));
        break;
    case 1:
        kernels::apply_1q(amps_, n_qubits_, q, y);
        break;
    default:
        kernels::apply_1q(amps_, n_qubits_, q, gate_matrix(GateKind::CZ));
        break;
    }
}

Statevector apply_gate(Statevector state, const Gate &gate, std::span<const double> params,
                       Rng *rng) {
    state.apply(gate, params, rng);
    return state;
}

Statevector run_statevector(const Circuit &circuit, std::span<const double> bound_params,
                            Statevector input, Rng *rng) {
    if (bound_params.size() != static_cast<std::size_t>(circuit.n_params())) {
        throw std::invalid_argument("expected " + std::to_string(circuit.n_params()) +
                                    " parameters, got " + std::to_string(bound_params.size()));
    }
    if (input.n_qubits() != circuit.n_qubits()) {
        throw std::invalid_argument("input state width does not match the circuit");
    }
    for (const Gate &g : circuit.gates()) {
        input.apply(g, bound_params, rng);
    }
    return input;
}

Statevector run_statevector(const Circuit &circuit, std::span<const double> bound_params) {
    return run_statevector(circuit, bound_params, Statevector(circuit.n_qubits()));
}

double overlap(const Statevector &a, const Statevector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("overlap of states with different widths");
    }
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return std::abs(s);
}

} // namespace pqcopt
