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

#include "pqcopt/qsim/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pqcopt/circuit/circuit.hpp"
#include "pqcopt/qsim/kernels.hpp"

namespace pqcopt {
namespace {

struct ErrorEvent {
    std::size_t gate;
    std::array<std::uint8_t, 2> paulis;
};

// Keeps checkpoint memory around 64 MiB for wide registers.
constexpr std::size_t kCheckpointBudget = std::size_t{1} << 22;

// Gate with its matrix bound, for the trajectory loop.
struct PreparedOp {
    GateKind kind;
    int q0, q1;
    Mat2 m;
};

PreparedOp prepare(const Gate &g, std::span<const double> params) {
    const double angle = g.angle ? g.angle->bind(params) : 0.0;
    Mat2 m{};
    if (g.kind != GateKind::SWAP && g.kind != GateKind::RESET) {
        m = gate_matrix(g.kind, angle);
    }
    return PreparedOp{g.kind, g.qubits[0], g.qubits[1], m};
}

void apply_op(std::span<cplx> amps, int n, const PreparedOp &op) {
    if (op.kind == GateKind::ID) {
        return;
    }
    if (op.kind == GateKind::SWAP) {
        kernels::apply_swap(amps, n, op.q0, op.q1);
    } else if (is_two_qubit(op.kind)) {
        kernels::apply_controlled_1q(amps, n, op.q0, op.q1, op.m);
    } else {
        kernels::apply_1q(amps, n, op.q0, op.m);
    }
}

void apply_pauli_op(std::span<cplx> amps, int n, int pauli, int q) {
    static const Mat2 kPaulis[3] = {
        {0.0, 1.0, 1.0, 0.0},
        {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0},
        {1.0, 0.0, 0.0, -1.0},
    };
    kernels::apply_1q(amps, n, q, kPaulis[pauli]);
}

// Inverse-CDF draw over |amp|^2 with one uniform, no allocation.
std::uint64_t sample_amplitudes(std::span<const cplx> amps, Rng &rng) {
    double total = 0.0;
    for (const cplx &a : amps) {
        total += std::norm(a);
    }
    const double u = uniform01(rng) * total;
    double acc = 0.0;
    std::uint64_t last = 0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > 0.0) {
            last = i;
        }
        acc += p;
        if (u < acc) {
            return i;
        }
    }
    return last;
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("error probability outside [0, 1]");
    }
}

} // namespace

NoiseModel::NoiseModel(int n_qubits)
    : n_qubits_(n_qubits), readout_(static_cast<std::size_t>(n_qubits), 0.0) {
    if (n_qubits < 1) {
        throw std::invalid_argument("noise model needs at least one qubit");
    }
}

NoiseModel NoiseModel::noiseless(int n_qubits) {
    NoiseModel m(n_qubits);
    m.all_zero_ = true;
    return m;
}

void NoiseModel::set_gate_error(GateKind kind, std::array<int, 2> qubits, double p) {
    check_probability(p);
    gate_errors_[GateKey{kind, qubits}] = p;
}

void NoiseModel::set_readout_error(int q, double p) {
    check_probability(p);
    readout_.at(static_cast<std::size_t>(q)) = p;
}

std::optional<double> NoiseModel::gate_error(const Gate &gate) const {
    auto it = gate_errors_.find(GateKey::of(gate));
    if (it != gate_errors_.end()) {
        return it->second;
    }
    if (all_zero_ || gate.kind == GateKind::ID || gate.kind == GateKind::RESET) {
        return 0.0;
    }
    return std::nullopt;
}

std::vector<std::uint64_t> run_noisy_histogram(const Circuit &circuit,
                                               std::span<const double> bound_params,
                                               const NoiseModel &noise, int shots,
                                               std::uint64_t seed, NoisyMethod method) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be positive");
    }
    const int n = circuit.n_qubits();
    if (noise.n_qubits() < n) {
        throw std::invalid_argument("noise model is narrower than the circuit");
    }
    if (bound_params.size() != static_cast<std::size_t>(circuit.n_params())) {
        throw std::invalid_argument("parameter count mismatch");
    }
    const auto &gates = circuit.gates();
    const std::size_t n_gates = gates.size();

    // cumulative[g] = -log P(no error in gates [0, g)), over gates with p < 1.
    // Gates with p = 1 always fail and are tracked separately.
    std::vector<double> cumulative(n_gates + 1, 0.0);
    std::vector<std::size_t> certain;
    bool has_reset = false;
    for (std::size_t g = 0; g < n_gates; ++g) {
        auto p = noise.gate_error(gates[g]);
        if (!p) {
            throw std::invalid_argument("no error rate for " + describe(gates[g]));
        }
        double hazard = 0.0;
        if (*p >= 1.0) {
            certain.push_back(g);
        } else {
            hazard = -std::log1p(-*p);
        }
        cumulative[g + 1] = cumulative[g] + hazard;
        has_reset = has_reset || gates[g].kind == GateKind::RESET;
    }
    const bool gate_noise = cumulative[n_gates] > 0.0 || !certain.empty();

    if (method == NoisyMethod::Auto) {
        method = gate_noise && !has_reset && n <= kDensityMaxQubits ? NoisyMethod::Density
                                                                     : NoisyMethod::Trajectory;
    }
    if (method == NoisyMethod::Density) {
        const auto dist = noisy_distribution(circuit, bound_params, noise);
        const DiscreteSampler sampler(dist);
        Rng rng(seed);
        std::vector<std::uint64_t> hist(dist.size(), 0);
        for (int s = 0; s < shots; ++s) {
            ++hist[sampler(rng)];
        }
        return hist;
    }

    Rng rng(seed);
    std::vector<ErrorEvent> events;
    auto draw_events = [&] {
        events.clear();
        if (!gate_noise) {
            return;
        }
        std::size_t pos = 0;
        while (pos < n_gates) {
            // Exponential waiting "time" in accumulated hazard; memorylessness
            // allows a fresh draw after every event.
            const double target = cumulative[pos] - std::log(1.0 - uniform01(rng));
            auto it = std::upper_bound(cumulative.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                                       cumulative.end(), target);
            std::size_t g = it == cumulative.end()
                                ? n_gates
                                : static_cast<std::size_t>(it - cumulative.begin()) - 1;
            auto c = std::lower_bound(certain.begin(), certain.end(), pos);
            if (c != certain.end()) {
                g = std::min(g, *c);
            }
            if (g >= n_gates) {
                break;
            }
            ErrorEvent ev{g, {0, 0}};
            for (int k = 0; k < gates[g].arity(); ++k) {
                ev.paulis[static_cast<std::size_t>(k)] =
                    static_cast<std::uint8_t>(uniform_index(rng, 3));
            }
            events.push_back(ev);
            pos = g + 1;
        }
    };
    auto inject = [&](Statevector &sv, const ErrorEvent &ev) {
        const Gate &g = gates[ev.gate];
        for (int k = 0; k < g.arity(); ++k) {
            sv.apply_pauli(ev.paulis[static_cast<std::size_t>(k)],
                           g.qubits[static_cast<std::size_t>(k)]);
        }
    };
    // Runs gates [from, n_gates) on `sv`, injecting the pending events.
    auto run_from = [&](Statevector &sv, std::size_t from, std::size_t next_event) {
        for (std::size_t g = from; g < n_gates; ++g) {
            sv.apply(gates[g], bound_params, &rng);
            while (next_event < events.size() && events[next_event].gate == g) {
                inject(sv, events[next_event]);
                ++next_event;
            }
        }
    };
    auto sample_one = [&](const Statevector &sv) {
        const std::vector<double> probs = sv.probabilities();
        return DiscreteSampler(probs)(rng);
    };

    std::vector<std::uint64_t> hist(std::size_t{1} << n, 0);
    auto record = [&](std::uint64_t outcome) {
        for (int q = 0; q < n; ++q) {
            const double r = noise.readout_error(q);
            if (r > 0.0 && uniform01(rng) < r) {
                outcome ^= std::uint64_t{1} << (n - 1 - q);
            }
        }
        ++hist[outcome];
    };

    if (has_reset) {
        // RESET outcomes depend on the trajectory, so no ideal prefix is shared.
        for (int s = 0; s < shots; ++s) {
            draw_events();
            Statevector sv(n);
            run_from(sv, 0, 0);
            record(sample_one(sv));
        }
        return hist;
    }

    // Ideal pass with checkpoints: checkpoints[c] is the state before gate
    // c*stride. Gate matrices are bound once; trajectories reuse one buffer.
    const std::size_t dim = std::size_t{1} << n;
    std::vector<PreparedOp> ops;
    ops.reserve(n_gates);
    for (const Gate &g : gates) {
        ops.push_back(prepare(g, bound_params));
    }
    const std::size_t stride = std::max<std::size_t>(1, (n_gates * dim) / kCheckpointBudget);
    std::vector<std::vector<cplx>> checkpoints;
    std::vector<cplx> ideal(dim, cplx{0.0, 0.0});
    ideal[0] = 1.0;
    for (std::size_t g = 0; g < n_gates; ++g) {
        if (gate_noise && g % stride == 0) {
            checkpoints.push_back(ideal);
        }
        apply_op(ideal, n, ops[g]);
    }
    std::vector<double> ideal_probs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        ideal_probs[i] = std::norm(ideal[i]);
    }
    const DiscreteSampler ideal_sampler(ideal_probs);
    std::vector<cplx> work(dim);
    for (int s = 0; s < shots; ++s) {
        draw_events();
        if (events.empty()) {
            record(ideal_sampler(rng));
            continue;
        }
        const std::size_t first = events.front().gate;
        const std::size_t c = first / stride;
        std::copy(checkpoints[c].begin(), checkpoints[c].end(), work.begin());
        std::size_t next = 0;
        for (std::size_t g = c * stride; g < n_gates; ++g) {
            apply_op(work, n, ops[g]);
            while (next < events.size() && events[next].gate == g) {
                const Gate &eg = gates[g];
                for (int k = 0; k < eg.arity(); ++k) {
                    apply_pauli_op(work, n, events[next].paulis[static_cast<std::size_t>(k)],
                                   eg.qubits[static_cast<std::size_t>(k)]);
                }
                ++next;
            }
        }
        record(sample_amplitudes(work, rng));
    }
    return hist;
}

std::vector<double> noisy_distribution(const Circuit &circuit, std::span<const double> bound_params,
                                       const NoiseModel &noise) {
    const int n = circuit.n_qubits();
    if (noise.n_qubits() < n) {
        throw std::invalid_argument("noise model is narrower than the circuit");
    }
    if (bound_params.size() != static_cast<std::size_t>(circuit.n_params())) {
        throw std::invalid_argument("parameter count mismatch");
    }
    // Qubits no gate touches stay |0> and only see readout flips; they are
    // folded in at the end so rho covers the active register only.
    std::vector<int> compact(static_cast<std::size_t>(n), -1);
    int m = 0;
    for (const Gate &g : circuit.gates()) {
        for (int k = 0; k < g.arity(); ++k) {
            int &c = compact[static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(k)])];
            if (c < 0) {
                c = 0;
            }
        }
    }
    for (int &c : compact) {
        if (c >= 0) {
            c = m++;
        }
    }
    if (m > 13) {
        throw std::invalid_argument("register too wide for a density matrix");
    }
    // rho as a 2m-qubit vector: row bits high, column bits low, so row qubit q
    // is qubit q and column qubit q is qubit m+q.
    const std::size_t dim = std::size_t{1} << m;
    std::vector<cplx> rho(dim * dim, cplx{0.0, 0.0});
    rho[0] = 1.0;
    std::vector<cplx> err;
    auto conj = [](const Mat2 &u) {
        return Mat2{std::conj(u[0]), std::conj(u[1]), std::conj(u[2]), std::conj(u[3])};
    };
    // With weight p: rho -> (1-p) rho + p (1/3) sum_P P rho P on qubit q.
    auto twirl = [&](std::vector<cplx> &r, int q, double p) {
        const std::size_t rb = std::size_t{1} << (2 * m - 1 - q);
        const std::size_t cb = std::size_t{1} << (m - 1 - q);
        const double keep = 1.0 - 2.0 * p / 3.0, move = 2.0 * p / 3.0, off = 1.0 - 4.0 * p / 3.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if ((i & rb) || (i & cb)) {
                continue;
            }
            const cplx a00 = r[i], a11 = r[i | rb | cb];
            r[i] = keep * a00 + move * a11;
            r[i | rb | cb] = move * a00 + keep * a11;
            r[i | cb] *= off;
            r[i | rb] *= off;
        }
    };
    const int w = 2 * m;
    for (const Gate &g : circuit.gates()) {
        if (g.kind == GateKind::RESET) {
            throw std::invalid_argument("RESET is not supported by the density path");
        }
        auto p = noise.gate_error(g);
        if (!p) {
            throw std::invalid_argument("no error rate for " + describe(g));
        }
        const PreparedOp op = prepare(g, bound_params);
        const int a = compact[static_cast<std::size_t>(op.q0)];
        const int b = g.arity() > 1 ? compact[static_cast<std::size_t>(op.q1)] : -1;
        if (op.kind == GateKind::SWAP) {
            kernels::apply_swap(rho, w, a, b);
            kernels::apply_swap(rho, w, m + a, m + b);
        } else if (op.kind == GateKind::ID) {
        } else if (is_two_qubit(op.kind)) {
            kernels::apply_controlled_1q(rho, w, a, b, op.m);
            kernels::apply_controlled_1q(rho, w, m + a, m + b, conj(op.m));
        } else {
            kernels::apply_1q(rho, w, a, op.m);
            kernels::apply_1q(rho, w, m + a, conj(op.m));
        }
        if (*p <= 0.0) {
            continue;
        }
        if (g.arity() == 1) {
            twirl(rho, a, *p);
        } else {
            // Joint event: both operands get a Pauli, so the channel does not
            // factor per qubit.
            err = rho;
            twirl(err, a, 1.0);
            twirl(err, b, 1.0);
            for (std::size_t i = 0; i < rho.size(); ++i) {
                rho[i] = (1.0 - *p) * rho[i] + *p * err[i];
            }
        }
    }
    const std::size_t full = std::size_t{1} << n;
    std::vector<double> dist(full, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t idx = 0;
        for (int q = 0; q < n; ++q) {
            const int c = compact[static_cast<std::size_t>(q)];
            if (c >= 0 && (i >> (m - 1 - c)) & 1U) {
                idx |= std::size_t{1} << (n - 1 - q);
            }
        }
        dist[idx] = std::max(0.0, rho[i * dim + i].real());
    }
    for (int q = 0; q < n; ++q) {
        const double r = noise.readout_error(q);
        if (r <= 0.0) {
            continue;
        }
        const std::size_t bit = std::size_t{1} << (n - 1 - q);
        for (std::size_t i = 0; i < full; ++i) {
            if (!(i & bit)) {
                const double p0 = dist[i], p1 = dist[i | bit];
                dist[i] = (1.0 - r) * p0 + r * p1;
                dist[i | bit] = r * p0 + (1.0 - r) * p1;
            }
        }
    }
    return dist;
}

CountsMap run_noisy(const Circuit &circuit, std::span<const double> bound_params,
                    const NoiseModel &noise, int shots, std::uint64_t seed) {
    auto hist = run_noisy_histogram(circuit, bound_params, noise, shots, seed);
    return CountsMap::from_histogram(circuit.n_qubits(), hist);
}

} // namespace pqcopt
