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

#include <functional>
#include <span>
#include <vector>

namespace pqcopt {

struct CobylaOptions {
    int max_evals = 100;
    double rhobeg = 1.0;
    double rhoend = 1e-4;
};

struct CobylaResult {
    std::vector<double> x;
    double f = 0.0;
    int evals = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Unconstrained COBYLA: linear interpolation on a d+1 point simplex,
/// steps of length rho down the model gradient, geometry-restoring steps
/// when the simplex degenerates, and rho halving from rhobeg to rhoend.
/// Never evaluates f more than max_evals times; returns the best point seen.
/// Throws std::domain_error if f returns a non-finite value.
CobylaResult cobyla_minimize(const Objective &f, std::vector<double> x0,
                             const CobylaOptions &opts = {});

} // namespace pqcopt
