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

#include "pqcopt/transpile/transpile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pqcopt {

namespace {

bool rz_vanishes(const Gate &g) {
    if (g.kind != GateKind::RZ) {
        return false;
    }
    const Angle &a = *g.angle;
    const bool constant = a.is_constant() || a.coeff == 0.0;
    return constant && std::abs(std::remainder(a.offset, 2.0 * std::numbers::pi)) < 1e-12;
}

std::optional<Angle> combine(const Angle &a, const Angle &b) {
    if (b.is_constant()) {
        return a.shifted(b.offset);
    }
    if (a.is_constant()) {
        return b.shifted(a.offset);
    }
    if (a.slot == b.slot) {
        return Angle::param(a.slot, a.coeff + b.coeff, a.offset + b.offset);
    }
    return std::nullopt;
}

// One left-to-right pass; returns true if anything changed.
bool peephole_pass(std::vector<Gate> &gates, int n_qubits) {
    std::vector<bool> removed(gates.size(), false);
    // Index of the latest surviving gate on each wire.
    std::vector<int> last(static_cast<std::size_t>(n_qubits), -1);
    bool changed = false;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        Gate &g = gates[i];
        if (rz_vanishes(g)) {
            removed[i] = true;
            changed = true;
            continue;
        }
        const int q0 = g.qubits[0];
        const int prev = last[static_cast<std::size_t>(q0)];
        if (g.kind == GateKind::RZ && prev >= 0 && gates[static_cast<std::size_t>(prev)].kind == GateKind::RZ) {
            Gate &p = gates[static_cast<std::size_t>(prev)];
            if (auto merged = combine(*p.angle, *g.angle)) {
                p.angle = merged;
                if (merged->coeff == 0.0) {
                    p.angle = Angle::constant(merged->offset);
                }
                removed[i] = true;
                changed = true;
                if (rz_vanishes(p)) {
                    // Expose whatever preceded it on this wire.
                    removed[static_cast<std::size_t>(prev)] = true;
                    int k = prev;
                    while (k-- > 0) {
                        if (!removed[static_cast<std::size_t>(k)] && gates[static_cast<std::size_t>(k)].acts_on(q0)) {
                            break;
                        }
                    }
                    last[static_cast<std::size_t>(q0)] = k;
                }
                continue;
            }
        }
        if (g.kind == GateKind::CX) {
            const int q1 = g.qubits[1];
            if (prev >= 0 && prev == last[static_cast<std::size_t>(q1)] &&
                gates[static_cast<std::size_t>(prev)] == g) {
                // Cancel; rescanning on the next pass picks up newly adjacent gates.
                removed[static_cast<std::size_t>(prev)] = true;
                removed[i] = true;
                changed = true;
                last[static_cast<std::size_t>(q0)] = -1;
                last[static_cast<std::size_t>(q1)] = -1;
                continue;
            }
            last[static_cast<std::size_t>(q1)] = static_cast<int>(i);
        }
        last[static_cast<std::size_t>(q0)] = static_cast<int>(i);
    }
    if (changed) {
        std::vector<Gate> kept;
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (!removed[i]) {
                kept.push_back(gates[i]);
            }
        }
        gates = std::move(kept);
    }
    return changed;
}

} // namespace

Circuit peephole(const Circuit &circuit) {
    std::vector<Gate> gates = circuit.gates();
    while (peephole_pass(gates, circuit.n_qubits())) {
    }
    Circuit out(circuit.n_qubits());
    out.reserve_params(circuit.n_params());
    for (const Gate &g : gates) {
        out.append(g);
    }
    return out;
}

TranspiledCircuit transpile(const Circuit &circuit, const BackendSnapshot &backend) {
    Circuit basis(circuit.n_qubits());
    basis.reserve_params(circuit.n_params());
    for (const Gate &g : circuit.gates()) {
        for (const Gate &h : decompose_cr(g)) {
            if (h.kind == GateKind::CX) {
                basis.append(h);
                continue;
            }
            for (const Gate &k : decompose_1q(h)) {
                basis.append(k);
            }
        }
    }
    TranspiledCircuit routed = route(basis, backend);
    routed.circuit = peephole(routed.circuit);
    for (const Gate &g : routed.circuit.gates()) {
        if (!backend.basis_gates.contains(g.kind)) {
            throw std::logic_error("transpile produced non-basis gate " + describe(g));
        }
    }
    return routed;
}

double complexity(const Circuit &physical, const BackendSnapshot &backend) {
    double total = 0.0;
    for (const Gate &g : physical.gates()) {
        auto e = backend.gate_error(g);
        if (!e) {
            throw std::invalid_argument("backend " + backend.name + " has no error rate for " +
                                        describe(g));
        }
        total += *e;
    }
    return total;
}

Statevector embed_logical(const Statevector &logical, std::span<const int> layout,
                          int n_physical) {
    const int n = logical.n_qubits();
    std::vector<cplx> amps(std::size_t{1} << n_physical, cplx{0.0, 0.0});
    const auto &src = logical.amplitudes();
    for (std::uint64_t i = 0; i < src.size(); ++i) {
        std::uint64_t p = 0;
        for (int l = 0; l < n; ++l) {
            if ((i >> (n - 1 - l)) & 1U) {
                p |= std::uint64_t{1} << (n_physical - 1 - layout[static_cast<std::size_t>(l)]);
            }
        }
        amps[p] = src[i];
    }
    return Statevector::from_amplitudes(std::move(amps));
}

std::uint64_t logical_outcome(std::uint64_t physical, std::span<const int> layout, int n_logical,
                              int n_physical) {
    std::uint64_t out = 0;
    for (int l = 0; l < n_logical; ++l) {
        const int p = layout[static_cast<std::size_t>(l)];
        if ((physical >> (n_physical - 1 - p)) & 1U) {
            out |= std::uint64_t{1} << (n_logical - 1 - l);
        }
    }
    return out;
}

} // namespace pqcopt
