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

#include "pqcopt/qsim/kernels.hpp"

#include <cstdint>
#include <utility>

namespace pqcopt::kernels {
namespace {

inline std::uint64_t bit_of(int n_qubits, int q) {
    return std::uint64_t{1} << (n_qubits - 1 - q);
}

// Inserts a zero at bit position `pos` of `k`.
inline std::uint64_t insert_zero(std::uint64_t k, std::uint64_t bit) {
    return ((k & ~(bit - 1)) << 1) | (k & (bit - 1));
}

inline void mix(cplx &a0, cplx &a1, const Mat2 &m) {
    const cplx x = a0;
    const cplx y = a1;
    a0 = m[0] * x + m[1] * y;
    a1 = m[2] * x + m[3] * y;
}

} // namespace

namespace serial {

void apply_1q(std::span<cplx> amps, int n_qubits, int q, const Mat2 &m) {
    const std::uint64_t bit = bit_of(n_qubits, q);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) == 0) {
            mix(amps[i], amps[i | bit], m);
        }
    }
}

void apply_controlled_1q(std::span<cplx> amps, int n_qubits, int control, int target,
                         const Mat2 &m) {
    const std::uint64_t cbit = bit_of(n_qubits, control);
    const std::uint64_t tbit = bit_of(n_qubits, target);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & cbit) != 0 && (i & tbit) == 0) {
            mix(amps[i], amps[i | tbit], m);
        }
    }
}

void apply_swap(std::span<cplx> amps, int n_qubits, int a, int b) {
    const std::uint64_t abit = bit_of(n_qubits, a);
    const std::uint64_t bbit = bit_of(n_qubits, b);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & abit) != 0 && (i & bbit) == 0) {
            std::swap(amps[i], amps[(i & ~abit) | bbit]);
        }
    }
}

} // namespace serial

namespace omp {

void apply_1q(std::span<cplx> amps, int n_qubits, int q, const Mat2 &m) {
    const std::uint64_t bit = bit_of(n_qubits, q);
    const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
    cplx *data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < pairs; ++k) {
        const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(k), bit);
        mix(data[i0], data[i0 | bit], m);
    }
}

void apply_controlled_1q(std::span<cplx> amps, int n_qubits, int control, int target,
                         const Mat2 &m) {
    const std::uint64_t cbit = bit_of(n_qubits, control);
    const std::uint64_t tbit = bit_of(n_qubits, target);
    const std::uint64_t lo = cbit < tbit ? cbit : tbit;
    const std::uint64_t hi = cbit < tbit ? tbit : cbit;
    const auto quads = static_cast<std::int64_t>(amps.size() / 4);
    cplx *data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < quads; ++k) {
        const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
        const std::uint64_t i0 = base | cbit;
        mix(data[i0], data[i0 | tbit], m);
    }
}

void apply_swap(std::span<cplx> amps, int n_qubits, int a, int b) {
    const std::uint64_t abit = bit_of(n_qubits, a);
    const std::uint64_t bbit = bit_of(n_qubits, b);
    const std::uint64_t lo = abit < bbit ? abit : bbit;
    const std::uint64_t hi = abit < bbit ? bbit : abit;
    const auto quads = static_cast<std::int64_t>(amps.size() / 4);
    cplx *data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < quads; ++k) {
        const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
        std::swap(data[base | abit], data[base | bbit]);
    }
}

} // namespace omp

void apply_1q(std::span<cplx> amps, int n_qubits, int q, const Mat2 &m) {
    if (n_qubits >= kParallelThreshold) {
        omp::apply_1q(amps, n_qubits, q, m);
    } else {
        serial::apply_1q(amps, n_qubits, q, m);
    }
}

void apply_controlled_1q(std::span<cplx> amps, int n_qubits, int control, int target,
                         const Mat2 &m) {
    if (n_qubits >= kParallelThreshold) {
        omp::apply_controlled_1q(amps, n_qubits, control, target, m);
    } else {
        serial::apply_controlled_1q(amps, n_qubits, control, target, m);
    }
}

void apply_swap(std::span<cplx> amps, int n_qubits, int a, int b) {
    if (n_qubits >= kParallelThreshold) {
        omp::apply_swap(amps, n_qubits, a, b);
    } else {
        serial::apply_swap(amps, n_qubits, a, b);
    }
}

double prob_one(std::span<const cplx> amps, int n_qubits, int q) {
    const std::uint64_t bit = bit_of(n_qubits, q);
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) != 0) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

} // namespace pqcopt::kernels
