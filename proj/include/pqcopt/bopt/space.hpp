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
#include <span>
#include <string>
#include <vector>

#include "pqcopt/circuit/genome.hpp"
#include "pqcopt/common/random.hpp"

namespace pqcopt {

struct Dimension {
    std::string name;
    int cardinality = 2;
};

/// Product of categorical dimensions; an assignment holds one value in
/// [0, cardinality) per dimension.
class SearchSpace {
  public:
    SearchSpace() = default;
    explicit SearchSpace(std::vector<Dimension> dims);

    const std::vector<Dimension> &dimensions() const { return dims_; }
    std::size_t size() const { return dims_.size(); }

    bool contains(std::span<const int> assignment) const;
    std::vector<int> random_assignment(Rng &rng) const;

  private:
    std::vector<Dimension> dims_;
};

/// Binary e_i_j for every ordered pair i != j (row-major), then
/// categorical p_i_k over the gate_choice codes for every wire i and
/// column k (wire-major).
SearchSpace genome_space(const DesignParams &design);

AnsatzGenome decode_genome(const DesignParams &design, std::span<const int> assignment);
std::vector<int> encode_genome(const AnsatzGenome &genome);

} // namespace pqcopt
