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

#include "pqcopt/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "pqcopt/bopt/space.hpp"
#include "pqcopt/bopt/trial_log.hpp"
#include "pqcopt/circuit/ansatz.hpp"
#include "pqcopt/circuit/serialize.hpp"
#include "pqcopt/transpile/transpile.hpp"

namespace pqcopt {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Child-seed stream labels under the master seed.
constexpr std::uint64_t kEvalSeedStream = 0xc0de0001;
constexpr std::uint64_t kSearchSeedStream = 0xc0de0002;
constexpr std::uint64_t kTemplateSeedStream = 0xc0de0003;

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

void write_json(const fs::path &path, const json &doc) { write_text(path, doc.dump(2) + "\n"); }

/// Creates the output directory; refuses to clobber earlier results unless
/// forced (or, for searches, resuming).
void prepare_out(const RunConfig &cfg, std::initializer_list<const char *> products) {
    const fs::path out(cfg.out);
    fs::create_directories(out);
    if (cfg.force || cfg.resume) {
        return;
    }
    for (const char *p : products) {
        if (fs::exists(out / p)) {
            throw std::runtime_error((out / p).string() +
                                     " exists; pass --force to overwrite or --resume to continue");
        }
    }
}

EvalConfig eval_config(const RunConfig &cfg, int parallelism) {
    EvalConfig e;
    e.k = cfg.k;
    e.train_fraction = cfg.train_fraction;
    e.n_seeds = cfg.n_seeds;
    e.max_evals = cfg.max_evals;
    e.shots = cfg.shots;
    e.seed = derive_seed(cfg.seed, {kEvalSeedStream});
    e.parallelism = parallelism;
    return e;
}

std::shared_ptr<const BackendSnapshot> load_backend(const RunConfig &cfg) {
    if (cfg.backend.empty()) {
        return nullptr;
    }
    return std::make_shared<const BackendSnapshot>(
        load_backend_snapshot(resolve_input_path(cfg.backend)));
}

Dataset load_checked(const RunConfig &cfg) {
    cfg.validate();
    Dataset data = load_dataset(cfg.dataset);
    if (static_cast<int>(data.n_features()) != cfg.design.n_qubits) {
        throw std::invalid_argument("dataset has " + std::to_string(data.n_features()) +
                                    " features but the design uses " +
                                    std::to_string(cfg.design.n_qubits) + " qubits");
    }
    return data;
}

std::optional<double> complexity_of(const Circuit &ansatz, const Dataset &data,
                                    const BackendSnapshot *backend) {
    if (!backend) {
        return std::nullopt;
    }
    VqcModel m(FeatureMap::zz(ansatz.n_qubits()), ansatz, data.n_classes);
    return model_complexity(m, *backend);
}

void write_evals(const fs::path &dir, const std::vector<RoleReport> &reports) {
    json arr = json::array();
    for (const auto &r : reports) {
        arr.push_back(role_report_to_json(r));
    }
    write_json(dir / "evals.json", arr);
}

json circuit_record(const Trial &t, const DesignParams &design, const Circuit &c,
                    std::optional<double> complexity) {
    json doc{{"trial", t.id},
             {"objectives", t.objectives},
             {"assignment", t.assignment},
             {"genome", genome_to_json(decode_genome(design, t.assignment))},
             {"circuit", circuit_to_json(c)}};
    if (complexity) {
        doc["complexity"] = *complexity;
    }
    return doc;
}

/// Resume support: previously logged trials, or none.
std::vector<Trial> existing_trials(const RunConfig &cfg, const fs::path &log) {
    if (!fs::exists(log)) {
        return {};
    }
    if (!cfg.resume) {
        if (!cfg.force) {
            throw std::runtime_error(log.string() + " exists; pass --resume or --force");
        }
        fs::remove(log);
        return {};
    }
    auto trials = read_trial_log(log);
    std::erase_if(trials, [&](const Trial &t) { return t.id >= cfg.trials; });
    return trials;
}

OptimizeResult run_optimizer(const RunConfig &cfg, const SearchSpace &space, const Evaluator &eval,
                             OptimizeConfig::Mode mode, const fs::path &log) {
    auto prior = existing_trials(cfg, log);
    const int already = static_cast<int>(prior.size());
    TrialLogWriter writer(log);
    OptimizeConfig oc;
    oc.n_trials = cfg.trials;
    oc.mode = mode;
    oc.parallelism = cfg.parallelism;
    oc.seed = derive_seed(cfg.seed, {kSearchSeedStream});
    oc.tpe = cfg.tpe;
    int done = already;
    oc.on_record = [&](const Trial &t) {
        writer.write(t);
        ++done;
        std::cerr << "trial " << t.id << " (" << done << "/" << cfg.trials << ") "
                  << to_string(t.state);
        for (double v : t.objectives) {
            std::cerr << ' ' << fixed6(v);
        }
        if (!t.error.empty()) {
            std::cerr << " error: " << t.error;
        }
        std::cerr << '\n';
    };
    return optimize(eval, space, oc, std::move(prior));
}

std::string trial_row(const Trial &t, const Circuit *c, std::optional<double> cx, bool multi) {
    std::string row = std::to_string(t.id) + "," + std::string(to_string(t.state)) + ",";
    row += t.complete() ? fixed6(t.objectives[0]) : "";
    row += ",";
    if (multi) {
        row += t.complete() ? fixed6(t.objectives[1]) : "";
    } else if (cx) {
        row += fixed6(*cx);
    }
    row += ",";
    if (c) {
        row += std::to_string(c->n_params()) + "," + std::to_string(c->size()) + "," +
               std::to_string(c->two_qubit_count());
    } else {
        row += ",,";
    }
    return row;
}

} // namespace

Circuit circuit_for_assignment(const DesignParams &design, std::span<const int> assignment) {
    return postprocess(build_ansatz(decode_genome(design, assignment)));
}

json role_report_to_json(const RoleReport &r) {
    json doc{{"role", r.role}, {"report", r.report.to_json()}};
    if (r.complexity) {
        doc["complexity"] = *r.complexity;
    }
    return doc;
}

RoleReport role_report_from_json(const json &doc) {
    RoleReport r;
    r.role = doc.at("role").get<std::string>();
    r.report = EvalReport::from_json(doc.at("report"));
    if (doc.contains("complexity")) {
        r.complexity = doc.at("complexity").get<double>();
    }
    return r;
}

std::vector<RoleReport> read_evals(const fs::path &run_dir) {
    const fs::path p = run_dir / "evals.json";
    std::ifstream in(p);
    if (!in) {
        throw std::invalid_argument("missing run artifact " + p.string());
    }
    json doc;
    try {
        in >> doc;
        std::vector<RoleReport> out;
        for (const auto &e : doc) {
            out.push_back(role_report_from_json(e));
        }
        return out;
    } catch (const json::exception &e) {
        throw std::invalid_argument("malformed " + p.string() + ": " + e.what());
    }
}

fs::path cmd_gen_data(const RunConfig &cfg) {
    cfg.validate();
    fs::create_directories(cfg.out);
    const fs::path path = fs::path(cfg.out) / "synthetic.csv";
    if (fs::exists(path) && !cfg.force) {
        throw std::runtime_error(path.string() + " exists; pass --force to overwrite");
    }
    Dataset ds = gen_synthetic(cfg.dataset.seed, cfg.dataset.synthetic);
    write_csv(ds, path);
    std::string summary = "file,rows,features,classes,class_counts\n";
    std::string counts;
    for (auto [label, n] : ds.class_histogram()) {
        counts += (counts.empty() ? "" : " ") + std::to_string(label) + ":" + std::to_string(n);
    }
    summary += "synthetic.csv," + std::to_string(ds.size()) + "," + std::to_string(ds.n_features()) +
               "," + std::to_string(ds.n_classes) + "," + counts + "\n";
    write_text(fs::path(cfg.out) / "summary.csv", summary);
    return path;
}

BaselineResult cmd_baseline(const RunConfig &cfg) {
    Dataset data = load_checked(cfg);
    prepare_out(cfg, {"baseline.csv", "summary.csv", "evals.json"});
    const auto backend = load_backend(cfg);
    const bool noisy = cfg.mode == RunConfig::Mode::Noisy;
    const Execution exec = noisy ? Execution::noisy(backend) : Execution::ideal();
    const EvalConfig ecfg = eval_config(cfg, cfg.parallelism);
    const std::uint64_t tseed = derive_seed(cfg.seed, {kTemplateSeedStream});
    const int n = cfg.design.n_qubits;

    BaselineResult result;
    for (TemplateName name : cfg.baseline.templates) {
        std::vector<Entanglement> ents = cfg.baseline.entanglements;
        if (name == TemplateName::PauliTwoDesign) {
            ents = {Entanglement::Builtin};
        }
        for (int reps : cfg.baseline.reps) {
            for (Entanglement ent : ents) {
                Circuit c = template_circuit(name, n, reps, ent, tseed);
                BaselineRow row{name, reps, ent, c.n_params(), kfold_evaluate(c, data, ecfg, exec), false};
                std::string id = std::string(to_string(name)) + "(reps=" + std::to_string(reps);
                if (ent != Entanglement::Builtin) {
                    id += "," + std::string(to_string(ent));
                }
                row.report.ansatz_id = id + ")";
                std::cerr << row.report.ansatz_id << " mean " << fixed6(row.report.mean) << " std "
                          << fixed6(row.report.std) << '\n';
                result.rows.push_back(std::move(row));
            }
        }
    }

    std::vector<RoleReport> evals;
    for (TemplateName name : cfg.baseline.templates) {
        BaselineRow *best = nullptr;
        for (auto &row : result.rows) {
            if (row.name == name && (!best || row.report.mean > best->report.mean)) {
                best = &row;
            }
        }
        if (best) {
            best->best_of_template = true;
            Circuit c = template_circuit(name, n, best->reps, best->entanglement, tseed);
            evals.push_back({"baseline", best->report, complexity_of(c, data, backend.get())});
        }
    }

    std::string csv = "template,reps,entanglement,n_params," + EvalReport::csv_header() + ",best\n";
    for (const auto &row : result.rows) {
        csv += std::string(to_string(row.name)) + "," + std::to_string(row.reps) + "," +
               std::string(to_string(row.entanglement)) + "," + std::to_string(row.n_params) + "," +
               row.report.csv_row() + "," + (row.best_of_template ? "1" : "0") + "\n";
    }
    const fs::path out(cfg.out);
    write_text(out / "baseline.csv", csv);
    write_text(out / "summary.csv", csv);
    write_evals(out, evals);
    return result;
}

SearchResult cmd_search(const RunConfig &cfg) {
    if (cfg.mode == RunConfig::Mode::MultiObjective) {
        throw std::invalid_argument("use search-mo for the multi-objective mode");
    }
    Dataset data = load_checked(cfg);
    prepare_out(cfg, {"trials.jsonl", "summary.csv", "best_circuit.json"});
    const auto backend = load_backend(cfg);
    const bool noisy = cfg.mode == RunConfig::Mode::Noisy;
    const Execution exec = noisy ? Execution::noisy(backend) : Execution::ideal();
    const SearchSpace space = genome_space(cfg.design);
    // Trials run concurrently, so folds stay serial inside each trial.
    const EvalConfig ecfg = eval_config(cfg, 1);

    std::mutex cache_mu;
    std::map<int, EvalReport> reports;
    Evaluator eval = [&](std::span<const int> a, const TrialContext &ctx) {
        Circuit c = circuit_for_assignment(cfg.design, a);
        EvalReport r = kfold_evaluate(c, data, ecfg, exec);
        std::lock_guard lock(cache_mu);
        reports[ctx.id] = r;
        return std::vector<double>{r.mean};
    };
    const fs::path out(cfg.out);
    SearchResult res;
    res.optimization = run_optimizer(cfg, space, eval, OptimizeConfig::Mode::Single, out / "trials.jsonl");
    if (!res.optimization.best) {
        throw std::runtime_error("every trial failed; see trials.jsonl");
    }
    const Trial &best = *res.optimization.best;
    res.best_circuit = circuit_for_assignment(cfg.design, best.assignment);
    auto it = reports.find(best.id);
    res.best_report = it != reports.end() ? it->second : kfold_evaluate(res.best_circuit, data, ecfg, exec);
    res.best_report.ansatz_id = noisy ? "bpqco_noisy" : "bpqco";
    res.best_complexity = complexity_of(res.best_circuit, data, backend.get());

    std::vector<RoleReport> evals{{"search", res.best_report, res.best_complexity}};
    if (cfg.rescore_noisy && !noisy) {
        EvalReport r = kfold_evaluate(res.best_circuit, data, eval_config(cfg, cfg.parallelism),
                                      Execution::noisy(backend));
        r.ansatz_id = "bpqco";
        res.noisy_report = r;
        evals.push_back({"degradation", r, res.best_complexity});
    }

    write_json(out / "best_circuit.json",
               circuit_record(best, cfg.design, res.best_circuit, res.best_complexity));
    write_evals(out, evals);

    std::string csv = "id,state,accuracy,complexity,n_params,n_gates,n_cx,best\n";
    for (const Trial &t : res.optimization.history) {
        std::optional<Circuit> c;
        std::optional<double> cx;
        if (t.state != TrialState::Failed) {
            c = circuit_for_assignment(cfg.design, t.assignment);
            cx = complexity_of(*c, data, backend.get());
        }
        csv += trial_row(t, c ? &*c : nullptr, cx, false) + "," + (t.id == best.id ? "1" : "0") + "\n";
    }
    write_text(out / "summary.csv", csv);
    return res;
}

MoResult cmd_search_mo(const RunConfig &cfg) {
    RunConfig c2 = cfg;
    c2.mode = RunConfig::Mode::MultiObjective;
    Dataset data = load_checked(c2);
    prepare_out(c2, {"trials.jsonl", "summary.csv", "pareto.csv"});
    const auto backend = load_backend(c2);
    const SearchSpace space = genome_space(c2.design);
    const EvalConfig ecfg = eval_config(c2, 1);

    Evaluator eval = [&](std::span<const int> a, const TrialContext &) {
        Circuit c = circuit_for_assignment(c2.design, a);
        const double acc = kfold_evaluate(c, data, ecfg, Execution::ideal()).mean;
        return std::vector<double>{acc, *complexity_of(c, data, backend.get())};
    };
    const fs::path out(c2.out);
    MoResult res;
    res.optimization = run_optimizer(c2, space, eval, OptimizeConfig::Mode::Multi, out / "trials.jsonl");
    if (res.optimization.front.empty()) {
        throw std::runtime_error("every trial failed; see trials.jsonl");
    }

    const fs::path pdir = out / "pareto";
    if (fs::exists(pdir)) {
        fs::remove_all(pdir);
    }
    fs::create_directories(pdir);
    for (const Trial &t : res.optimization.front) {
        MoFrontMember m{t, circuit_for_assignment(c2.design, t.assignment), std::nullopt};
        write_json(pdir / ("trial_" + std::to_string(t.id) + ".json"),
                   circuit_record(t, c2.design, m.circuit, t.objectives[1]));
        if (c2.rescore_noisy) {
            m.noisy_report = kfold_evaluate(m.circuit, data, eval_config(c2, c2.parallelism),
                                            Execution::noisy(backend));
            m.noisy_report->ansatz_id = "bpqco_mo";
            std::cerr << "front trial " << t.id << " noisy mean " << fixed6(m.noisy_report->mean)
                      << " std " << fixed6(m.noisy_report->std) << '\n';
        }
        res.front.push_back(std::move(m));
    }
    if (c2.rescore_noisy) {
        // Best noisy mean; ties by stability (lower std), then lower id.
        std::size_t sel = 0;
        for (std::size_t i = 1; i < res.front.size(); ++i) {
            const auto &a = *res.front[i].noisy_report;
            const auto &b = *res.front[sel].noisy_report;
            if (a.mean > b.mean || (a.mean == b.mean && a.std < b.std)) {
                sel = i;
            }
        }
        res.selected = sel;
        const auto &m = res.front[sel];
        write_json(out / "selected_circuit.json",
                   circuit_record(m.trial, c2.design, m.circuit, m.trial.objectives[1]));
        write_evals(out, {{"mo_selected", *m.noisy_report, m.trial.objectives[1]}});
    }

    std::string pcsv = "id,accuracy,complexity,noisy_mean,noisy_std,selected\n";
    for (std::size_t i = 0; i < res.front.size(); ++i) {
        const auto &m = res.front[i];
        pcsv += std::to_string(m.trial.id) + "," + fixed6(m.trial.objectives[0]) + "," +
                fixed6(m.trial.objectives[1]) + ",";
        pcsv += m.noisy_report ? fixed6(m.noisy_report->mean) + "," + fixed6(m.noisy_report->std) : ",";
        pcsv += std::string(",") + (res.selected == i ? "1" : "0") + "\n";
    }
    write_text(out / "pareto.csv", pcsv);

    std::string csv = "id,state,accuracy,complexity,n_params,n_gates,n_cx,pareto\n";
    for (const Trial &t : res.optimization.history) {
        std::optional<Circuit> c;
        if (t.state != TrialState::Failed) {
            c = circuit_for_assignment(c2.design, t.assignment);
        }
        bool on_front = false;
        for (const auto &m : res.front) {
            on_front = on_front || m.trial.id == t.id;
        }
        csv += trial_row(t, c ? &*c : nullptr, std::nullopt, true) + "," + (on_front ? "1" : "0") + "\n";
    }
    write_text(out / "summary.csv", csv);
    return res;
}

} // namespace pqcopt
