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

#include "pqcopt/qsim/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace pqcopt {

std::string to_bitstring(std::uint64_t index, int n_bits) {
    std::string s(static_cast<std::size_t>(n_bits), '0');
    for (int q = 0; q < n_bits; ++q) {
        if ((index >> (n_bits - 1 - q)) & 1U) {
            s[static_cast<std::size_t>(q)] = '1';
        }
    }
    return s;
}

CountsMap CountsMap::from_histogram(int n_bits, std::span<const std::uint64_t> histogram) {
    if (histogram.size() != (std::size_t{1} << n_bits)) {
        throw std::invalid_argument("histogram size does not match bit count");
    }
    CountsMap map(n_bits);
    for (std::size_t i = 0; i < histogram.size(); ++i) {
        if (histogram[i] != 0) {
            map.counts_.emplace(to_bitstring(i, n_bits), histogram[i]);
            map.total_ += histogram[i];
        }
    }
    return map;
}

std::uint64_t CountsMap::count(std::string_view bitstring) const {
    auto it = counts_.find(bitstring);
    return it == counts_.end() ? 0 : it->second;
}

DiscreteSampler::DiscreteSampler(std::span<const double> weights) : cumulative_(weights.size()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        cumulative_[i] = acc;
    }
    if (!(acc > 0.0)) {
        throw std::invalid_argument("cannot sample from an all-zero distribution");
    }
}

std::uint64_t DiscreteSampler::operator()(Rng &rng) const {
    const double u = uniform01(rng) * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        --it;
    }
    return static_cast<std::uint64_t>(it - cumulative_.begin());
}

std::vector<std::uint64_t> sample_histogram(const Statevector &state, int shots, Rng &rng) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be positive");
    }
    const std::vector<double> probs = state.probabilities();
    DiscreteSampler sampler(probs);
    std::vector<std::uint64_t> hist(probs.size(), 0);
    for (int s = 0; s < shots; ++s) {
        ++hist[sampler(rng)];
    }
    return hist;
}

CountsMap sample_counts(const Statevector &state, int shots, std::uint64_t seed) {
    Rng rng(seed);
    const auto hist = sample_histogram(state, shots, rng);
    return CountsMap::from_histogram(state.n_qubits(), hist);
}

} // namespace pqcopt
