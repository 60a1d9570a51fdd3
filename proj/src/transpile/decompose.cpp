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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pqcopt/transpile/transpile.hpp"

namespace pqcopt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

bool zero_mod_2pi(double a) {
    double r = std::remainder(a, 2.0 * kPi);
    return std::abs(r) < kAngleTol;
}

void push_rz(std::vector<Gate> &out, int q, Angle a) {
    if (a.is_constant() && zero_mod_2pi(a.offset)) {
        return;
    }
    out.push_back(Gate::rotation(GateKind::RZ, q, a));
}

void push_rz(std::vector<Gate> &out, int q, double a) { push_rz(out, q, Angle::constant(a)); }

// U3(theta, phi, lam) = RZ(phi) RY(theta) RZ(lam) up to phase, emitted in
// time order.
std::vector<Gate> u3_sequence(int q, double theta, double phi, double lam) {
    std::vector<Gate> out;
    const double t = std::remainder(theta, 2.0 * kPi);
    const double eps = 1e-10;
    if (std::abs(t) < eps) {
        push_rz(out, q, phi + lam);
    } else if (std::abs(t - kPi / 2) < eps) {
        push_rz(out, q, lam - kPi / 2);
        out.push_back(Gate::one(GateKind::SX, q));
        push_rz(out, q, phi + kPi / 2);
    } else if (std::abs(std::abs(t) - kPi) < eps) {
        push_rz(out, q, lam + kPi);
        out.push_back(Gate::one(GateKind::X, q));
        push_rz(out, q, phi);
    } else {
        push_rz(out, q, lam);
        out.push_back(Gate::one(GateKind::SX, q));
        push_rz(out, q, t + kPi);
        out.push_back(Gate::one(GateKind::SX, q));
        push_rz(out, q, phi + kPi);
    }
    return out;
}

// ZYZ angles of a constant 2x2 unitary.
std::vector<Gate> decompose_matrix(int q, const Mat2 &u) {
    const cplx det = u[0] * u[3] - u[1] * u[2];
    const cplx s = std::sqrt(det);
    const cplx v00 = u[0] / s, v10 = u[2] / s, v11 = u[3] / s;
    const double theta = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
    const double plus = 2.0 * std::arg(v11);
    const double minus = 2.0 * std::arg(v10);
    const double phi = (plus + minus) / 2.0;
    const double lam = (plus - minus) / 2.0;
    return u3_sequence(q, theta, phi, lam);
}

} // namespace

std::vector<Gate> decompose_1q(const Gate &g) {
    if (is_two_qubit(g.kind)) {
        throw std::invalid_argument("decompose_1q: two-qubit gate " + describe(g));
    }
    const int q = g.qubits[0];
    switch (g.kind) {
    case GateKind::ID:
        return {};
    case GateKind::X:
    case GateKind::SX:
    case GateKind::RESET:
        return {g};
    case GateKind::RZ: {
        std::vector<Gate> out;
        push_rz(out, q, *g.angle);
        return out;
    }
    case GateKind::RX:
    case GateKind::RY:
        if (!g.angle->is_constant()) {
            // Keep the slot symbolic: the fixed frame around the middle RZ
            // carries the axis change.
            std::vector<Gate> out;
            if (g.kind == GateKind::RX) {
                push_rz(out, q, kPi / 2);
            }
            out.push_back(Gate::one(GateKind::SX, q));
            push_rz(out, q, g.angle->shifted(kPi));
            out.push_back(Gate::one(GateKind::SX, q));
            push_rz(out, q, g.kind == GateKind::RX ? kPi / 2 : kPi);
            return out;
        }
        [[fallthrough]];
    default:
        return decompose_matrix(q, gate_matrix(g.kind, g.angle ? g.angle->offset : 0.0));
    }
}

std::vector<Gate> decompose_cr(const Gate &g) {
    if (!is_two_qubit(g.kind)) {
        return {g};
    }
    const int a = g.qubits[0], b = g.qubits[1];
    const Gate cx = Gate::two(GateKind::CX, a, b);
    switch (g.kind) {
    case GateKind::CX:
        return {g};
    case GateKind::CZ:
        return {Gate::one(GateKind::H, b), cx, Gate::one(GateKind::H, b)};
    case GateKind::SWAP:
        return {cx, Gate::two(GateKind::CX, b, a), cx};
    case GateKind::CRZ:
    case GateKind::CRY: {
        const GateKind r = g.kind == GateKind::CRZ ? GateKind::RZ : GateKind::RY;
        return {Gate::rotation(r, b, g.angle->scaled(0.5)), cx,
                Gate::rotation(r, b, g.angle->scaled(-0.5)), cx};
    }
    case GateKind::CRX:
        return {Gate::one(GateKind::H, b),
                Gate::rotation(GateKind::RZ, b, g.angle->scaled(0.5)),
                cx,
                Gate::rotation(GateKind::RZ, b, g.angle->scaled(-0.5)),
                cx,
                Gate::one(GateKind::H, b)};
    default:
        throw std::logic_error("decompose_cr: unhandled kind");
    }
}

} // namespace pqcopt
