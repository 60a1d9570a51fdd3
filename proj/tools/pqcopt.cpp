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

// pqcopt: ansatz search, baselines and reports from the command line.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pqcopt/cli/commands.hpp"
#include "pqcopt/cli/config.hpp"
#include "pqcopt/cli/report.hpp"

using namespace pqcopt;

namespace {

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<std::string> backend;
    std::optional<std::string> out;
    std::optional<int> parallelism;
    bool resume = false;
    bool force = false;
    bool rescore = false;
};

void add_common(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config, "JSON run configuration");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--trials", o.trials, "number of trials");
    cmd->add_option("--backend", o.backend, "backend snapshot JSON");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--parallelism", o.parallelism, "worker threads");
    cmd->add_flag("--resume", o.resume, "continue from an existing trials.jsonl");
    cmd->add_flag("--force", o.force, "overwrite existing outputs");
}

RunConfig resolve(const Overrides &o) {
    RunConfig c = o.config.empty() ? RunConfig{} : load_config(o.config);
    if (o.seed) {
        c.seed = *o.seed;
    }
    if (o.trials) {
        c.trials = *o.trials;
    }
    if (o.backend) {
        c.backend = *o.backend;
    }
    if (o.out) {
        c.out = *o.out;
    }
    if (o.parallelism) {
        c.parallelism = *o.parallelism;
    }
    c.resume = o.resume;
    c.force = o.force;
    c.rescore_noisy = c.rescore_noisy || o.rescore;
    return c;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Bayesian search for parameterized quantum circuit ansatze"};
    app.require_subcommand(1);

    Overrides o;
    auto *gen = app.add_subcommand("gen-data", "write the synthetic dataset as CSV");
    auto *base = app.add_subcommand("baseline", "sweep the template ansatze");
    auto *search = app.add_subcommand("search", "single-objective ansatz search");
    auto *noisy = app.add_subcommand("search-noisy", "search in the noisy environment");
    auto *mo = app.add_subcommand("search-mo", "accuracy vs complexity search");
    for (auto *cmd : {gen, base, search, noisy, mo}) {
        add_common(cmd, o);
    }
    std::optional<std::string> mode;
    search->add_option("--mode", mode, "ideal or noisy");
    search->add_flag("--rescore", o.rescore, "re-score the best circuit under noise");
    mo->add_flag("--rescore", o.rescore, "re-score the front under noise and select a circuit");

    auto *report = app.add_subcommand("report", "compare evaluation reports of several runs");
    std::vector<std::string> runs;
    std::string report_out = "report";
    bool report_force = false;
    report->add_option("runs", runs, "run directories")->required();
    report->add_option("--out", report_out, "output directory");
    report->add_flag("--force", report_force, "overwrite existing outputs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*report) {
            std::vector<std::filesystem::path> dirs(runs.begin(), runs.end());
            auto rows = cmd_report(dirs, report_out, report_force);
            std::cout << report_csv(rows);
            return 0;
        }
        RunConfig cfg = resolve(o);
        if (*gen) {
            std::cout << cmd_gen_data(cfg).string() << '\n';
        } else if (*base) {
            auto r = cmd_baseline(cfg);
            for (const auto &row : r.rows) {
                if (row.best_of_template) {
                    std::cout << "best " << row.report.ansatz_id << " " << row.report.mean << " +- "
                              << row.report.std << '\n';
                }
            }
        } else if (*search || *noisy) {
            if (*noisy) {
                cfg.mode = RunConfig::Mode::Noisy;
            } else if (mode) {
                cfg.mode = parse_mode(*mode);
            }
            auto r = cmd_search(cfg);
            std::cout << "best trial " << r.optimization.best->id << " accuracy " << r.best_report.mean
                      << " +- " << r.best_report.std;
            if (r.best_complexity) {
                std::cout << " complexity " << *r.best_complexity;
            }
            std::cout << '\n';
        } else if (*mo) {
            auto r = cmd_search_mo(cfg);
            std::cout << "pareto front: " << r.front.size() << " circuits\n";
            if (r.selected) {
                const auto &m = r.front[*r.selected];
                std::cout << "selected trial " << m.trial.id << " noisy accuracy " << m.noisy_report->mean
                          << " complexity " << m.trial.objectives[1] << '\n';
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
