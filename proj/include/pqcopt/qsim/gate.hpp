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

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqcopt {

using cplx = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

enum class GateKind : std::uint8_t {
    H,
    X,
    SX,
    ID,
    RX,
    RY,
    RZ,
    CX,
    CZ,
    CRX,
    CRY,
    CRZ,
    SWAP,
    RESET,
};

std::string_view to_string(GateKind kind);
/// Case-insensitive.
std::optional<GateKind> parse_gate_kind(std::string_view name);

constexpr bool is_rotation(GateKind k) {
    return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ || k == GateKind::CRX ||
           k == GateKind::CRY || k == GateKind::CRZ;
}

constexpr bool is_simple_rotation(GateKind k) {
    return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

constexpr bool is_two_qubit(GateKind k) {
    return k == GateKind::CX || k == GateKind::CZ || k == GateKind::CRX || k == GateKind::CRY ||
           k == GateKind::CRZ || k == GateKind::SWAP;
}

/// Rotation angle as an affine expression of at most one trainable slot:
/// `coeff * params[slot] + offset`, or the constant `offset` when slot < 0.
/// Keeping the expression symbolic lets trained parameters bind after the
/// circuit has been rewritten by the transpiler.
struct Angle {
    int slot = -1;
    double coeff = 1.0;
    double offset = 0.0;

    static Angle constant(double value) { return Angle{-1, 0.0, value}; }
    static Angle param(int slot, double coeff = 1.0, double offset = 0.0) {
        return Angle{slot, coeff, offset};
    }

    bool is_constant() const { return slot < 0; }

    /// Throws std::invalid_argument when the slot is not covered by `params`.
    double bind(std::span<const double> params) const;

    Angle scaled(double k) const { return Angle{slot, coeff * k, offset * k}; }
    Angle shifted(double d) const { return Angle{slot, coeff, offset + d}; }

    bool operator==(const Angle &) const = default;
};

struct Gate {
    GateKind kind = GateKind::ID;
    /// Control first for controlled kinds; qubits[1] is -1 for one-qubit gates.
    std::array<int, 2> qubits{-1, -1};
    std::optional<Angle> angle;

    static Gate one(GateKind kind, int q);
    static Gate two(GateKind kind, int q0, int q1);
    static Gate rotation(GateKind kind, int q, Angle angle);
    static Gate controlled_rotation(GateKind kind, int control, int target, Angle angle);

    int arity() const { return is_two_qubit(kind) ? 2 : 1; }
    bool acts_on(int q) const { return qubits[0] == q || (arity() == 2 && qubits[1] == q); }

    bool operator==(const Gate &) const = default;
};

/// Checks the Gate invariants against a register of `n_qubits`.
/// Throws std::invalid_argument on violation.
void validate_gate(const Gate &gate, int n_qubits);

/// 2x2 matrix of a one-qubit kind (H, X, SX, ID, RX, RY, RZ), or of the
/// target operation of a controlled kind (CX, CZ, CRX, CRY, CRZ).
Mat2 gate_matrix(GateKind kind, double angle = 0.0);

/// Exact inverse as a gate sequence, for every kind except RESET. Rotations
/// negate their angle; SX is inverted as SX^3.
std::vector<Gate> inverse(const Gate &gate);

std::string describe(const Gate &gate);

} // namespace pqcopt
