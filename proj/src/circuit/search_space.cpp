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

#include "pqcopt/circuit/search_space.hpp"

#include <stdexcept>

namespace pqcopt {

BigInt search_space_size(const DesignParams &design) {
    design.validate();
    const int n = design.n_qubits;
    BigInt masks = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n * (n - 1)));
    BigInt grids = boost::multiprecision::pow(BigInt(gate_choice_count(n)),
                                              static_cast<unsigned>(n * design.n_gates));
    return masks * grids;
}

std::string to_scientific(const BigInt &value, int significant) {
    if (significant < 1) {
        throw std::invalid_argument("need at least one significant digit");
    }
    if (value < 0) {
        return "-" + to_scientific(-value, significant);
    }
    std::string digits = value.str();
    auto exponent = static_cast<int>(digits.size()) - 1;
    if (static_cast<int>(digits.size()) > significant) {
        BigInt scale = boost::multiprecision::pow(
            BigInt(10), static_cast<unsigned>(digits.size() - static_cast<std::size_t>(significant)));
        BigInt rounded = (value + scale / 2) / scale;
        digits = rounded.str();
        if (static_cast<int>(digits.size()) > significant) { // carried into a new digit
            digits.pop_back();
            ++exponent;
        }
    } else {
        digits.append(static_cast<std::size_t>(significant) - digits.size(), '0');
    }
    std::string out(1, digits[0]);
    if (significant > 1) {
        out += '.';
        out += digits.substr(1);
    }
    return out + "e" + std::to_string(exponent);
}

} // namespace pqcopt
