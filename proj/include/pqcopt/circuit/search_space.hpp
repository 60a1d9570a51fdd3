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

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pqcopt/circuit/genome.hpp"

namespace pqcopt {

using BigInt = boost::multiprecision::cpp_int;

/// Number of distinct genomes: 2^(n(n-1)) entanglement masks times
/// (3(n-1)+4)^(n * n_gates) gate grids.
BigInt search_space_size(const DesignParams &design);

/// Decimal scientific notation rounded half-up to `significant` digits,
/// e.g. "7.78e25".
std::string to_scientific(const BigInt &value, int significant);

} // namespace pqcopt
