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
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pqcopt/qsim/gate.hpp"
#include "pqcopt/qsim/sampling.hpp"

namespace pqcopt {

class Circuit;

struct GateKey {
    GateKind kind;
    std::array<int, 2> qubits;

    static GateKey of(const Gate &g) { return GateKey{g.kind, g.qubits}; }
    auto operator<=>(const GateKey &) const = default;
};

/// Per-gate Pauli error probabilities and per-qubit readout flip
/// probabilities. Gates without an entry are rejected by run_noisy, except
/// ID and RESET which default to an error-free operation.
class NoiseModel {
  public:
    explicit NoiseModel(int n_qubits);

    /// Model in which every gate kind on every operand has zero error.
    static NoiseModel noiseless(int n_qubits);

    int n_qubits() const { return n_qubits_; }

    void set_gate_error(GateKind kind, std::array<int, 2> qubits, double p);
    void set_readout_error(int q, double p);

    std::optional<double> gate_error(const Gate &gate) const;
    double readout_error(int q) const { return readout_[static_cast<std::size_t>(q)]; }
    std::span<const double> readout_errors() const { return readout_; }

  private:
    int n_qubits_;
    bool all_zero_ = false;
    std::map<GateKey, double> gate_errors_;
    std::vector<double> readout_;
};

enum class NoisyMethod {
    Auto,       // Density for small registers without RESET, else Trajectory
    Trajectory, // per-shot Pauli trajectories
    Density,    // exact outcome distribution, then iid shots from it
};

/// Registers up to this width use the density-matrix path under Auto.
inline constexpr int kDensityMaxQubits = 10;

/// Noisy execution. Per shot, after each gate a uniformly random
/// non-identity Pauli is applied to every operand of that gate with
/// probability equal to the gate's error rate; each measured bit then flips
/// with its qubit's readout error. Both methods realise the same outcome law.
/// Deterministic for fixed seed; with all rates zero it consumes the engine
/// exactly like sample_counts.
std::vector<std::uint64_t> run_noisy_histogram(const Circuit &circuit,
                                               std::span<const double> bound_params,
                                               const NoiseModel &noise, int shots,
                                               std::uint64_t seed,
                                               NoisyMethod method = NoisyMethod::Auto);

/// Exact outcome distribution of the noisy process (readout included).
/// Circuits with RESET are rejected.
std::vector<double> noisy_distribution(const Circuit &circuit, std::span<const double> bound_params,
                                       const NoiseModel &noise);

CountsMap run_noisy(const Circuit &circuit, std::span<const double> bound_params,
                    const NoiseModel &noise, int shots, std::uint64_t seed);

} // namespace pqcopt
