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

// Serial reference vs OpenMP statevector kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "pqcopt/qsim/kernels.hpp"

using namespace pqcopt;

namespace {

std::vector<cplx> random_state(int n) {
    std::vector<cplx> v(std::size_t{1} << n);
    double x = 0.1;
    for (auto &a : v) {
        x = std::fmod(x * 3.7 + 0.31, 1.0);
        a = {x - 0.5, 0.5 - x * x};
    }
    return v;
}

const Mat2 kRy = gate_matrix(GateKind::RY, 0.7);

template <void (*Apply)(std::span<cplx>, int, int, const Mat2 &)>
void bm_1q(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_state(n);
    for (auto _ : state) {
        for (int q = 0; q < n; ++q) {
            Apply(amps, n, q, kRy);
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * n * static_cast<long>(amps.size()));
}

template <void (*Apply)(std::span<cplx>, int, int, int, const Mat2 &)>
void bm_controlled(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_state(n);
    const Mat2 x = gate_matrix(GateKind::X);
    for (auto _ : state) {
        for (int q = 0; q + 1 < n; ++q) {
            Apply(amps, n, q, q + 1, x);
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * (n - 1) * static_cast<long>(amps.size()));
}

} // namespace

BENCHMARK(bm_1q<kernels::serial::apply_1q>)->Name("1q/serial")->DenseRange(4, 20, 4);
BENCHMARK(bm_1q<kernels::omp::apply_1q>)->Name("1q/omp")->DenseRange(4, 20, 4);
BENCHMARK(bm_controlled<kernels::serial::apply_controlled_1q>)->Name("cx/serial")->DenseRange(4, 20, 4);
BENCHMARK(bm_controlled<kernels::omp::apply_controlled_1q>)->Name("cx/omp")->DenseRange(4, 20, 4);

BENCHMARK_MAIN();
