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

#include <cstddef>
#include <span>

#include "pqcopt/qsim/gate.hpp"

/// In-place statevector kernels. Qubit 0 is the most significant bit of an
/// amplitude index.
///
/// Two implementations are kept: `serial` is the straightforward reference
/// that scans every index and pairs it with its partner; `omp` enumerates
/// only the independent amplitude pairs/quads and distributes them across an
/// OpenMP team. The un-namespaced entry points dispatch to `omp` once the
/// register reaches kParallelThreshold qubits; below that, thread start-up
/// costs more than the loop.
namespace pqcopt::kernels {

inline constexpr int kParallelThreshold = 14;

namespace serial {
void apply_1q(std::span<cplx> amps, int n_qubits, int q, const Mat2 &m);
void apply_controlled_1q(std::span<cplx> amps, int n_qubits, int control, int target,
                         const Mat2 &m);
void apply_swap(std::span<cplx> amps, int n_qubits, int a, int b);
} // namespace serial

namespace omp {
void apply_1q(std::span<cplx> amps, int n_qubits, int q, const Mat2 &m);
void apply_controlled_1q(std::span<cplx> amps, int n_qubits, int control, int target,
                         const Mat2 &m);
void apply_swap(std::span<cplx> amps, int n_qubits, int a, int b);
} // namespace omp

void apply_1q(std::span<cplx> amps, int n_qubits, int q, const Mat2 &m);
void apply_controlled_1q(std::span<cplx> amps, int n_qubits, int control, int target,
                         const Mat2 &m);
void apply_swap(std::span<cplx> amps, int n_qubits, int a, int b);

/// Probability that qubit q measures 1.
double prob_one(std::span<const cplx> amps, int n_qubits, int q);

} // namespace pqcopt::kernels
