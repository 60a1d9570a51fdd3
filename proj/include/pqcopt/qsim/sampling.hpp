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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqcopt/common/random.hpp"
#include "pqcopt/qsim/statevector.hpp"

namespace pqcopt {

/// Bitstring of `index` over `n_bits`, qubit 0 leftmost.
std::string to_bitstring(std::uint64_t index, int n_bits);

/// Measurement outcome counts keyed by bitstring.
class CountsMap {
  public:
    explicit CountsMap(int n_bits = 1) : n_bits_(n_bits) {}

    /// `histogram[i]` is the count of basis index i; zero entries are omitted.
    static CountsMap from_histogram(int n_bits, std::span<const std::uint64_t> histogram);

    int n_bits() const { return n_bits_; }
    std::uint64_t total_shots() const { return total_; }
    std::uint64_t count(std::string_view bitstring) const;
    const std::map<std::string, std::uint64_t, std::less<>> &counts() const { return counts_; }

    bool operator==(const CountsMap &) const = default;

  private:
    int n_bits_;
    std::uint64_t total_ = 0;
    std::map<std::string, std::uint64_t, std::less<>> counts_;
};

/// Inverse-CDF sampler over a fixed discrete distribution. Each draw consumes
/// exactly one uniform from the engine.
class DiscreteSampler {
  public:
    explicit DiscreteSampler(std::span<const double> weights);
    std::uint64_t operator()(Rng &rng) const;

  private:
    std::vector<double> cumulative_;
};

/// Born-rule sampling of `shots` outcomes into a histogram of size 2^n.
std::vector<std::uint64_t> sample_histogram(const Statevector &state, int shots, Rng &rng);

/// Born-rule sampling with a fresh engine seeded by `seed`.
CountsMap sample_counts(const Statevector &state, int shots, std::uint64_t seed);

} // namespace pqcopt
