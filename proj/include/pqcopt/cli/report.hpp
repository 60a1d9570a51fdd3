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

#include "pqcopt/cli/commands.hpp"

namespace pqcopt {

struct ReportRow {
    std::string design;
    std::string environment;
    double mean = 0.0;
    double std = 0.0;
    /// Effect size against the environment's reference row; empty for the
    /// reference itself or when undefined.
    std::optional<double> cohens_d;
    bool reference = false;
};

/// The reference of an environment is its best-mean baseline entry, or its
/// first entry when the runs contain no baseline for it.
std::vector<ReportRow> build_report(std::span<const RoleReport> entries);

std::string report_csv(std::span<const ReportRow> rows);

/// Bar chart of mean accuracy per design with +-std error bars.
std::string report_svg(std::span<const ReportRow> rows);

/// Aggregates the evals.json of each run directory into report.csv,
/// report.svg and summary.csv under `out`.
std::vector<ReportRow> cmd_report(std::span<const std::filesystem::path> run_dirs,
                                  const std::filesystem::path &out, bool force);

} // namespace pqcopt
