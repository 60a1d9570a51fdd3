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

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqcopt/bopt/optimize.hpp"
#include "pqcopt/circuit/circuit.hpp"
#include "pqcopt/cli/config.hpp"
#include "pqcopt/vqc/evaluate.hpp"

namespace pqcopt {

/// One entry of a run's evals.json.
struct RoleReport {
    /// "baseline", "search", "degradation" or "mo_selected".
    std::string role;
    EvalReport report;
    std::optional<double> complexity;
};

struct BaselineRow {
    TemplateName name;
    int reps = 0;
    Entanglement entanglement;
    int n_params = 0;
    EvalReport report;
    bool best_of_template = false;
};

struct BaselineResult {
    std::vector<BaselineRow> rows;
};

struct SearchResult {
    OptimizeResult optimization;
    Circuit best_circuit;
    EvalReport best_report;
    std::optional<double> best_complexity;
    /// Best circuit re-scored under the backend's noise (rescore_noisy).
    std::optional<EvalReport> noisy_report;
};

struct MoFrontMember {
    Trial trial;
    Circuit circuit;
    std::optional<EvalReport> noisy_report;
};

struct MoResult {
    OptimizeResult optimization;
    std::vector<MoFrontMember> front;
    /// Index into `front` of the selected circuit (needs rescore_noisy).
    std::optional<std::size_t> selected;
};

/// Writes <out>/synthetic.csv (refuses to overwrite without force).
std::filesystem::path cmd_gen_data(const RunConfig &cfg);

/// Template sweep; writes baseline.csv, summary.csv and evals.json.
BaselineResult cmd_baseline(const RunConfig &cfg);

/// Single-objective search in the configured environment; writes
/// trials.jsonl, best_circuit.json, summary.csv and evals.json.
SearchResult cmd_search(const RunConfig &cfg);

/// Accuracy (ideal) vs transpiled complexity; writes trials.jsonl,
/// pareto/*.json, pareto.csv, summary.csv and, when re-scoring, evals.json
/// and selected_circuit.json.
MoResult cmd_search_mo(const RunConfig &cfg);

/// Postprocessed ansatz of an assignment in the genome space.
Circuit circuit_for_assignment(const DesignParams &design, std::span<const int> assignment);

nlohmann::json role_report_to_json(const RoleReport &r);
RoleReport role_report_from_json(const nlohmann::json &doc);
std::vector<RoleReport> read_evals(const std::filesystem::path &run_dir);

} // namespace pqcopt
