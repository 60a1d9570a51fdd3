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
#include <fstream>
#include <vector>

#include "json.hpp"
#include "pqcopt/bopt/trial.hpp"

namespace pqcopt {

nlohmann::json trial_to_json(const Trial &t);
Trial trial_from_json(const nlohmann::json &doc);

/// Append-only writer of one JSON document per line, flushed per trial.
class TrialLogWriter {
  public:
    /// Appends to an existing log; a torn final line (no trailing newline)
    /// is terminated first so new records start on their own line.
    explicit TrialLogWriter(const std::filesystem::path &path);
    void write(const Trial &t);

  private:
    std::ofstream out_;
};

/// Parses a trial log. Lines that are not JSON at all (torn writes from an
/// interrupted run) are skipped; JSON lines that are not trial records throw.
std::vector<Trial> read_trial_log(const std::filesystem::path &path);

} // namespace pqcopt
