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
#include <random>

#include "doctest.h"
#include "support/dense_oracle.hpp"

#include "pqcopt/circuit/circuit.hpp"
#include "pqcopt/common/random.hpp"
#include "pqcopt/qsim/kernels.hpp"
#include "pqcopt/qsim/noise.hpp"
#include "pqcopt/qsim/sampling.hpp"
#include "pqcopt/qsim/statevector.hpp"

using namespace pqcopt;

namespace {

double max_amp_error(const Statevector &sv, std::span<const oracle::cd> ref) {
    double worst = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        worst = std::max(worst, std::abs(sv[i] - ref[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("hadamard on zero") {
    Circuit c(1);
    c.append(Gate::one(GateKind::H, 0));
    auto sv = run_statevector(c, {});
    CHECK(std::abs(sv[0] - cplx(1 / std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(sv[1] - cplx(1 / std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("cx flips target when control set; qubit 0 is the high bit") {
    Circuit c(2);
    c.append(Gate::two(GateKind::CX, 0, 1));
    auto out = run_statevector(c, {}, Statevector::basis(2, 0b10));
    CHECK(std::abs(out[0b11] - cplx(1.0)) < 1e-12);
    CHECK(to_bitstring(0b10, 2) == "10");

    Circuit x0(2);
    x0.append(Gate::one(GateKind::X, 0));
    auto counts = sample_counts(run_statevector(x0, {}), 16, 1);
    CHECK(counts.count("10") == 16);
}

TEST_CASE("rz leaves z probabilities alone") {
    Circuit c(1);
    c.append(Gate::one(GateKind::H, 0));
    c.append(Gate::rotation(GateKind::RZ, 0, Angle::param(0)));
    for (double t : {0.0, 0.3, 1.7, -2.9, 6.0}) {
        const double p[] = {t};
        auto probs = run_statevector(c, p).probabilities();
        CHECK(probs[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(probs[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("empty circuit is the identity") {
    std::mt19937_64 rng(3);
    Circuit prep = oracle::random_circuit(3, 4, rng);
    Statevector in = run_statevector(prep, {});
    Statevector out = run_statevector(Circuit(3), {}, in);
    CHECK(max_amp_error(out, in.amplitudes()) == 0.0);
}

TEST_CASE("random circuits match the dense oracle") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const int depth = 1 + static_cast<int>(rng() % 10);
        Circuit c = oracle::random_circuit(4, depth, rng);
        auto ref = oracle::apply(oracle::circuit_unitary(c, {}), oracle::zero_state(4));
        CHECK(max_amp_error(run_statevector(c, {}), ref) < 1e-9);
    }
}

TEST_CASE("parametric angles bind like constants") {
    Circuit c(2);
    c.append(Gate::one(GateKind::H, 0));
    c.append(Gate::controlled_rotation(GateKind::CRY, 0, 1, Angle::param(1, -0.5, 0.25)));
    c.append(Gate::rotation(GateKind::RX, 1, Angle::param(0, 2.0)));
    const double p[] = {0.7, -1.3};
    auto ref = oracle::apply(oracle::circuit_unitary(c, p), oracle::zero_state(2));
    CHECK(max_amp_error(run_statevector(c, p), ref) < 1e-12);
    CHECK(max_amp_error(run_statevector(bind_parameters(c, p), {}), ref) < 1e-12);
}

TEST_CASE("consecutive rx rotations add") {
    Circuit two(1), one(1);
    two.append(Gate::rotation(GateKind::RX, 0, Angle::constant(0.4)));
    two.append(Gate::rotation(GateKind::RX, 0, Angle::constant(1.9)));
    one.append(Gate::rotation(GateKind::RX, 0, Angle::constant(2.3)));
    CHECK(overlap(run_statevector(two, {}), run_statevector(one, {})) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("inverse undoes every gate kind") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        Circuit c = oracle::random_circuit(3, 3, rng);
        Statevector sv = run_statevector(c, {});
        for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
            for (const Gate &g : inverse(*it)) {
                sv.apply(g);
            }
        }
        CHECK(std::abs(sv[0] - cplx(1.0)) < 1e-10);
    }
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd;
    for (int n : {3, 7, 15}) {
        std::vector<cplx> a(std::size_t{1} << n);
        for (auto &z : a) {
            z = {nd(rng), nd(rng)};
        }
        auto b = a;
        const Mat2 m = gate_matrix(GateKind::RY, 0.77);
        const Mat2 h = gate_matrix(GateKind::H);
        for (int q = 0; q < n; ++q) {
            kernels::serial::apply_1q(a, n, q, m);
            kernels::omp::apply_1q(b, n, q, m);
            kernels::serial::apply_controlled_1q(a, n, q, (q + 1) % n, h);
            kernels::omp::apply_controlled_1q(b, n, q, (q + 1) % n, h);
            kernels::serial::apply_swap(a, n, q, (q + 2) % n == q ? (q + 1) % n : (q + 2) % n);
            kernels::omp::apply_swap(b, n, q, (q + 2) % n == q ? (q + 1) % n : (q + 2) % n);
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst, std::abs(a[i] - b[i]));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("invalid gates are rejected") {
    Circuit c(2);
    CHECK_THROWS(c.append(Gate::one(GateKind::H, 2)));
    CHECK_THROWS(c.append(Gate::two(GateKind::CX, 1, 1)));
    CHECK_THROWS(Statevector::from_amplitudes({1.0, 1.0}));
    Circuit p(1);
    p.append(Gate::rotation(GateKind::RX, 0, Angle::param(0)));
    CHECK_THROWS(run_statevector(p, {}));
}

TEST_CASE("reset returns a qubit to zero") {
    Circuit c(2);
    c.append(Gate::one(GateKind::H, 0));
    c.append(Gate::two(GateKind::CX, 0, 1));
    c.append(Gate::one(GateKind::RESET, 1));
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        auto p = run_statevector(c, {}, Statevector(2), &rng).probabilities();
        CHECK(p[0b01] + p[0b11] < 1e-12);
    }
    Circuit bare(1);
    bare.append(Gate::one(GateKind::H, 0));
    bare.append(Gate::one(GateKind::RESET, 0));
    CHECK_THROWS(run_statevector(bare, {}));
}

// ---------------------------------------------------------------- sampling

TEST_CASE("sampling a basis state") {
    auto counts = sample_counts(Statevector(4), 1024, 99);
    CHECK(counts.total_shots() == 1024);
    CHECK(counts.count("0000") == 1024);
}

TEST_CASE("fair coin stays inside the binomial band") {
    // 512 +- 5 sigma, sigma = sqrt(1024 / 4) = 16
    Circuit c(1);
    c.append(Gate::one(GateKind::H, 0));
    const Statevector sv = run_statevector(c, {});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto zeros = sample_counts(sv, 1024, seed).count("0");
        CHECK(zeros >= 435);
        CHECK(zeros <= 589);
    }
}

TEST_CASE("sampling is deterministic in the seed") {
    std::mt19937_64 rng(1);
    const Statevector sv = run_statevector(oracle::random_circuit(3, 5, rng), {});
    CHECK(sample_counts(sv, 500, 17) == sample_counts(sv, 500, 17));
    CHECK_FALSE(sample_counts(sv, 500, 17) == sample_counts(sv, 500, 18));
}

TEST_CASE("discrete sampler follows its weights") {
    const double w[] = {0.1, 0.0, 0.6, 0.3};
    DiscreteSampler s(w);
    Rng rng(12);
    std::vector<int> hits(4, 0);
    const int n = 40000;
    for (int i = 0; i < n; ++i) {
        ++hits[s(rng)];
    }
    CHECK(hits[1] == 0);
    for (int i : {0, 2, 3}) {
        const double sd = std::sqrt(n * w[i] * (1 - w[i]));
        CHECK(std::abs(hits[static_cast<std::size_t>(i)] - n * w[i]) < 5 * sd);
    }
}

// ---------------------------------------------------------------- noise

TEST_CASE("zero noise reproduces ideal sampling exactly") {
    std::mt19937_64 rng(2);
    Circuit c = oracle::random_circuit(3, 6, rng);
    const Statevector sv = run_statevector(c, {});
    for (std::uint64_t seed : {0ULL, 7ULL, 123ULL}) {
        CHECK(run_noisy(c, {}, NoiseModel::noiseless(3), 1000, seed) == sample_counts(sv, 1000, seed));
    }
}

TEST_CASE("certain readout flip") {
    Circuit c(1);
    c.append(Gate::one(GateKind::X, 0));
    NoiseModel m(1);
    m.set_gate_error(GateKind::X, {0, -1}, 0.0);
    m.set_readout_error(0, 1.0);
    for (auto method : {NoisyMethod::Trajectory, NoisyMethod::Density}) {
        auto hist = run_noisy_histogram(c, {}, m, 256, 5, method);
        CHECK(hist[0] == 256);
    }
}

TEST_CASE("depolarized x gate matches the two-state chain") {
    // After X the qubit is |1>; with prob 0.5 one of X, Y, Z follows. X and Y
    // (2/3 of errors) move it back to |0>: P(0) = 0.5 * 2 / 3.
    Circuit c(1);
    c.append(Gate::one(GateKind::X, 0));
    NoiseModel m(1);
    m.set_gate_error(GateKind::X, {0, -1}, 0.5);
    const int shots = 10000;
    const double p0 = 0.5 * 2.0 / 3.0;
    const double sigma = std::sqrt(shots * p0 * (1 - p0));
    for (auto method : {NoisyMethod::Trajectory, NoisyMethod::Density}) {
        auto hist = run_noisy_histogram(c, {}, m, shots, 31, method);
        CHECK(std::abs(static_cast<double>(hist[0]) - shots * p0) <= 3 * sigma);
    }
    auto dist = noisy_distribution(c, {}, m);
    CHECK(dist[0] == doctest::Approx(p0).epsilon(1e-12));
}

TEST_CASE("trajectories sample the exact noisy distribution") {
    std::mt19937_64 rng(44);
    Circuit c = oracle::random_circuit(3, 6, rng);
    NoiseModel m(3);
    for (const Gate &g : c.gates()) {
        m.set_gate_error(g.kind, g.qubits, 0.03 + 0.02 * static_cast<double>(g.qubits[0]));
    }
    for (int q = 0; q < 3; ++q) {
        m.set_readout_error(q, 0.02 * (q + 1));
    }
    const auto exact = noisy_distribution(c, {}, m);
    double total = 0.0;
    for (double p : exact) {
        total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    const int shots = 40000;
    auto hist = run_noisy_histogram(c, {}, m, shots, 9, NoisyMethod::Trajectory);
    for (std::size_t i = 0; i < exact.size(); ++i) {
        const double sd = std::sqrt(shots * exact[i] * (1 - exact[i])) + 1.0;
        CHECK(std::abs(static_cast<double>(hist[i]) - shots * exact[i]) < 5 * sd);
    }
}

TEST_CASE("density path without errors equals born probabilities") {
    std::mt19937_64 rng(6);
    Circuit c = oracle::random_circuit(4, 8, rng);
    const auto dist = noisy_distribution(c, {}, NoiseModel::noiseless(4));
    const auto probs = run_statevector(c, {}).probabilities();
    for (std::size_t i = 0; i < probs.size(); ++i) {
        CHECK(dist[i] == doctest::Approx(probs[i]).epsilon(1e-12));
    }
}

TEST_CASE("idle qubits only see readout noise") {
    Circuit c(3);
    c.append(Gate::one(GateKind::H, 0));
    NoiseModel m(3);
    m.set_gate_error(GateKind::H, {0, -1}, 0.0);
    m.set_readout_error(2, 0.25);
    const auto dist = noisy_distribution(c, {}, m);
    CHECK(dist[0b000] == doctest::Approx(0.375));
    CHECK(dist[0b001] == doctest::Approx(0.125));
    CHECK(dist[0b100] == doctest::Approx(0.375));
    CHECK(dist[0b101] == doctest::Approx(0.125));
}

TEST_CASE("noisy runs are seeded and complete") {
    Circuit c(2);
    c.append(Gate::one(GateKind::H, 0));
    c.append(Gate::two(GateKind::CX, 0, 1));
    NoiseModel m(2);
    m.set_gate_error(GateKind::H, {0, -1}, 0.1);
    m.set_gate_error(GateKind::CX, {0, 1}, 0.2);
    CHECK(run_noisy(c, {}, m, 300, 4) == run_noisy(c, {}, m, 300, 4));
    CHECK(run_noisy(c, {}, m, 300, 4).total_shots() == 300);

    NoiseModel missing(2);
    missing.set_gate_error(GateKind::H, {0, -1}, 0.1);
    CHECK_THROWS(run_noisy(c, {}, missing, 10, 1));
    CHECK_THROWS(m.set_readout_error(0, 1.5));
}

TEST_CASE("noisy reset takes the trajectory path") {
    Circuit c(1);
    c.append(Gate::one(GateKind::X, 0));
    c.append(Gate::one(GateKind::RESET, 0));
    NoiseModel m(1);
    m.set_gate_error(GateKind::X, {0, -1}, 0.3);
    auto hist = run_noisy_histogram(c, {}, m, 200, 3);
    CHECK(hist[0] == 200);
    CHECK_THROWS(noisy_distribution(c, {}, m));
}

TEST_CASE("derived seeds separate streams") {
    CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
    CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
    CHECK(derive_seed(1, {2}) != derive_seed(2, {2}));
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const double u = uniform01(rng);
        CHECK((u >= 0.0 && u < 1.0));
        CHECK(uniform_index(rng, 7) < 7);
    }
}
