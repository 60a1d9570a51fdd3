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

#include "pqcopt/circuit/ansatz.hpp"

#include <numeric>
#include <optional>

namespace pqcopt {
namespace {

GateKind rotation_kind(GateChoice::Kind k) {
    switch (k) {
    case GateChoice::Kind::RX:
        return GateKind::RX;
    case GateChoice::Kind::RY:
        return GateKind::RY;
    case GateChoice::Kind::RZ:
        return GateKind::RZ;
    case GateChoice::Kind::CRX:
        return GateKind::CRX;
    case GateChoice::Kind::CRY:
        return GateKind::CRY;
    case GateChoice::Kind::CRZ:
        return GateKind::CRZ;
    case GateChoice::Kind::None:
        break;
    }
    return GateKind::ID;
}

std::vector<int> slot_uses(const std::vector<Gate> &gates, int n_params) {
    std::vector<int> uses(static_cast<std::size_t>(n_params), 0);
    for (const Gate &g : gates) {
        if (g.angle && !g.angle->is_constant()) {
            ++uses[static_cast<std::size_t>(g.angle->slot)];
        }
    }
    return uses;
}

// Angle of `a` followed by `b` on the same axis, if it stays affine in one
// slot. `dropped` receives b's slot when that slot disappears.
std::optional<Angle> merge_angles(const Angle &a, const Angle &b, const std::vector<int> &uses,
                                  int &dropped) {
    dropped = -1;
    if (a.is_constant() && b.is_constant()) {
        return Angle::constant(a.offset + b.offset);
    }
    if (b.is_constant()) {
        return a.shifted(b.offset);
    }
    if (a.is_constant()) {
        return b.shifted(a.offset);
    }
    if (a.slot == b.slot) {
        return Angle::param(a.slot, a.coeff + b.coeff, a.offset + b.offset);
    }
    if (uses[static_cast<std::size_t>(b.slot)] != 1) {
        return std::nullopt;
    }
    dropped = b.slot;
    return a.shifted(b.offset);
}

} // namespace

Circuit build_ansatz(const AnsatzGenome &genome) {
    genome.validate();
    const DesignParams &d = genome.design();
    Circuit c(d.n_qubits);
    for (int i = 0; i < d.n_qubits; ++i) {
        for (int j = 0; j < d.n_qubits; ++j) {
            if (genome.entangled(i, j)) {
                c.append(Gate::one(GateKind::H, i));
                c.append(Gate::two(GateKind::CX, i, j));
            }
        }
    }
    int slot = 0;
    for (int k = 0; k < d.n_gates; ++k) {
        for (int i = 0; i < d.n_qubits; ++i) {
            const GateChoice &choice = genome.choice(i, k);
            if (choice.kind == GateChoice::Kind::None) {
                continue;
            }
            const GateKind kind = rotation_kind(choice.kind);
            if (choice.is_controlled()) {
                c.append(Gate::controlled_rotation(kind, i, choice.target, Angle::param(slot++)));
            } else {
                c.append(Gate::rotation(kind, i, Angle::param(slot++)));
            }
        }
    }
    return c;
}

PostprocessResult postprocess_with_map(const Circuit &circuit) {
    std::vector<Gate> gates = circuit.gates();
    int n_params = circuit.n_params();
    std::vector<int> slot_map(static_cast<std::size_t>(n_params));
    std::iota(slot_map.begin(), slot_map.end(), 0);
    const int n_qubits = circuit.n_qubits();

    auto next_on_wire = [&](std::size_t from, int q) -> std::size_t {
        for (std::size_t i = from + 1; i < gates.size(); ++i) {
            if (gates[i].acts_on(q)) {
                return i;
            }
        }
        return gates.size();
    };

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<bool> removed(gates.size(), false);
        std::vector<int> uses = slot_uses(gates, n_params);

        // Rule 1: merge runs of identical simple rotations, scanning each run
        // from its first gate so chains collapse in one pass.
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (removed[i] || !is_simple_rotation(gates[i].kind)) {
                continue;
            }
            const int q = gates[i].qubits[0];
            for (std::size_t j = next_on_wire(i, q); j < gates.size(); j = next_on_wire(j, q)) {
                if (gates[j].kind != gates[i].kind) {
                    break;
                }
                int dropped = -1;
                auto merged = merge_angles(*gates[i].angle, *gates[j].angle, uses, dropped);
                if (!merged) {
                    break;
                }
                gates[i].angle = merged;
                removed[j] = true;
                changed = true;
                if (dropped >= 0) {
                    uses[static_cast<std::size_t>(dropped)] = 0;
                }
            }
        }

        std::vector<Gate> kept;
        kept.reserve(gates.size());
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (!removed[i]) {
                kept.push_back(gates[i]);
            }
        }
        gates = std::move(kept);

        // Rule 2: an RZ right before the final Z measurement only adds phases.
        std::vector<bool> seen(static_cast<std::size_t>(n_qubits), false);
        std::vector<bool> drop(gates.size(), false);
        for (std::size_t r = gates.size(); r-- > 0;) {
            const Gate &g = gates[r];
            const auto q0 = static_cast<std::size_t>(g.qubits[0]);
            if (g.kind == GateKind::RZ && !seen[q0]) {
                drop[r] = true;
                changed = true;
            }
            seen[q0] = true;
            if (g.arity() == 2) {
                seen[static_cast<std::size_t>(g.qubits[1])] = true;
            }
        }
        kept.clear();
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (!drop[i]) {
                kept.push_back(gates[i]);
            }
        }
        gates = std::move(kept);

        // Renumber the surviving slots in order of first use.
        std::vector<int> renumber(static_cast<std::size_t>(n_params), -1);
        int next = 0;
        for (Gate &g : gates) {
            if (g.angle && !g.angle->is_constant()) {
                int &r = renumber[static_cast<std::size_t>(g.angle->slot)];
                if (r < 0) {
                    r = next++;
                }
                g.angle->slot = r;
            }
        }
        for (int &s : slot_map) {
            if (s >= 0) {
                s = renumber[static_cast<std::size_t>(s)];
            }
        }
        n_params = next;
    }

    Circuit out(n_qubits);
    for (const Gate &g : gates) {
        out.append(g);
    }
    return PostprocessResult{std::move(out), std::move(slot_map)};
}

Circuit postprocess(const Circuit &circuit) {
    return postprocess_with_map(circuit).circuit;
}

} // namespace pqcopt
