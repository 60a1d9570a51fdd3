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

#include "pqcopt/qsim/gate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pqcopt {
namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 14> kNames{{
    {GateKind::H, "H"},
    {GateKind::X, "X"},
    {GateKind::SX, "SX"},
    {GateKind::ID, "ID"},
    {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::CX, "CX"},
    {GateKind::CZ, "CZ"},
    {GateKind::CRX, "CRX"},
    {GateKind::CRY, "CRY"},
    {GateKind::CRZ, "CRZ"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::RESET, "RESET"},
}};

} // namespace

std::string_view to_string(GateKind kind) {
    for (const auto &[k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    // Case-insensitive: snapshots conventionally use lower case ("cx").
    for (const auto &[k, n] : kNames) {
        if (n.size() == name.size() &&
            std::equal(n.begin(), n.end(), name.begin(), [](char a, char b) {
                return std::toupper(static_cast<unsigned char>(a)) ==
                       std::toupper(static_cast<unsigned char>(b));
            })) {
            return k;
        }
    }
    return std::nullopt;
}

double Angle::bind(std::span<const double> params) const {
    if (slot < 0) {
        return offset;
    }
    if (static_cast<std::size_t>(slot) >= params.size()) {
        throw std::invalid_argument("unbound parameter slot " + std::to_string(slot));
    }
    return coeff * params[static_cast<std::size_t>(slot)] + offset;
}

Gate Gate::one(GateKind kind, int q) {
    return Gate{kind, {q, -1}, std::nullopt};
}

Gate Gate::two(GateKind kind, int q0, int q1) {
    return Gate{kind, {q0, q1}, std::nullopt};
}

Gate Gate::rotation(GateKind kind, int q, Angle angle) {
    return Gate{kind, {q, -1}, angle};
}

Gate Gate::controlled_rotation(GateKind kind, int control, int target, Angle angle) {
    return Gate{kind, {control, target}, angle};
}

void validate_gate(const Gate &gate, int n_qubits) {
    auto in_range = [n_qubits](int q) { return q >= 0 && q < n_qubits; };
    if (!in_range(gate.qubits[0])) {
        throw std::invalid_argument("qubit index out of range in " + describe(gate));
    }
    if (gate.arity() == 2) {
        if (!in_range(gate.qubits[1])) {
            throw std::invalid_argument("qubit index out of range in " + describe(gate));
        }
        if (gate.qubits[0] == gate.qubits[1]) {
            throw std::invalid_argument("repeated qubit in " + describe(gate));
        }
    } else if (gate.qubits[1] != -1) {
        throw std::invalid_argument("one-qubit gate with two operands: " + describe(gate));
    }
    if (is_rotation(gate.kind) != gate.angle.has_value()) {
        throw std::invalid_argument("angle must be present exactly for rotations: " +
                                    describe(gate));
    }
}

Mat2 gate_matrix(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i{0.0, 1.0};
    switch (kind) {
    case GateKind::H:
        return {r, r, r, -r};
    case GateKind::X:
    case GateKind::CX:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::SX:
        return {cplx{0.5, 0.5}, cplx{0.5, -0.5}, cplx{0.5, -0.5}, cplx{0.5, 0.5}};
    case GateKind::ID:
        return {1.0, 0.0, 0.0, 1.0};
    case GateKind::CZ:
        return {1.0, 0.0, 0.0, -1.0};
    case GateKind::RX:
    case GateKind::CRX:
        return {c, -i * s, -i * s, c};
    case GateKind::RY:
    case GateKind::CRY:
        return {c, -s, s, c};
    case GateKind::RZ:
    case GateKind::CRZ:
        return {std::exp(-i * (angle / 2.0)), 0.0, 0.0, std::exp(i * (angle / 2.0))};
    case GateKind::SWAP:
    case GateKind::RESET:
        break;
    }
    throw std::invalid_argument("no 2x2 matrix for " + std::string(to_string(kind)));
}

std::vector<Gate> inverse(const Gate &gate) {
    if (gate.kind == GateKind::RESET) {
        throw std::invalid_argument("RESET has no inverse");
    }
    if (gate.kind == GateKind::SX) {
        return {gate, gate, gate};
    }
    Gate inv = gate;
    if (inv.angle) {
        inv.angle = inv.angle->scaled(-1.0);
    }
    return {inv};
}

std::string describe(const Gate &gate) {
    std::ostringstream os;
    os << to_string(gate.kind) << '(' << gate.qubits[0];
    if (gate.arity() == 2) {
        os << ',' << gate.qubits[1];
    }
    if (gate.angle) {
        if (gate.angle->is_constant()) {
            os << "; " << gate.angle->offset;
        } else {
            os << "; " << gate.angle->coeff << "*t" << gate.angle->slot << '+'
               << gate.angle->offset;
        }
    }
    os << ')';
    return os.str();
}

} // namespace pqcopt
