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

#include "pqcopt/cli/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace pqcopt {

using nlohmann::json;

namespace {

void reject_unknown(const json &obj, const std::set<std::string> &known, const std::string &where) {
    if (!obj.is_object()) {
        throw std::invalid_argument(where + " must be a JSON object");
    }
    for (const auto &[key, _] : obj.items()) {
        if (!known.contains(key)) {
            throw std::invalid_argument("unknown key '" + key + "' in " + where);
        }
    }
}

template <class T>
void read(const json &obj, const char *key, T &dst) {
    if (obj.contains(key)) {
        dst = obj.at(key).get<T>();
    }
}

} // namespace

std::string_view to_string(RunConfig::Mode mode) {
    switch (mode) {
    case RunConfig::Mode::Ideal:
        return "ideal";
    case RunConfig::Mode::Noisy:
        return "noisy";
    case RunConfig::Mode::MultiObjective:
        return "multi_objective";
    }
    return "?";
}

RunConfig::Mode parse_mode(std::string_view s) {
    if (s == "ideal") {
        return RunConfig::Mode::Ideal;
    }
    if (s == "noisy") {
        return RunConfig::Mode::Noisy;
    }
    if (s == "multi_objective") {
        return RunConfig::Mode::MultiObjective;
    }
    throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

void RunConfig::validate() const {
    design.validate();
    if (mode != Mode::Ideal && backend.empty()) {
        throw std::invalid_argument("mode " + std::string(to_string(mode)) +
                                    " requires a backend snapshot path");
    }
    if (rescore_noisy && backend.empty()) {
        throw std::invalid_argument("rescore_noisy requires a backend snapshot path");
    }
    if (trials < 1 || k < 1 || n_seeds < 1 || max_evals < 1 || shots < 1 || parallelism < 1) {
        throw std::invalid_argument("trials, k, n_seeds, max_evals, shots and parallelism must be positive");
    }
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::invalid_argument("train_fraction must be in (0, 1)");
    }
    if (dataset.kind != "iris" && dataset.kind != "synthetic" && dataset.kind != "csv") {
        throw std::invalid_argument("dataset.kind must be iris, synthetic or csv");
    }
    if (dataset.kind == "csv" && dataset.path.empty()) {
        throw std::invalid_argument("dataset.kind csv needs dataset.path");
    }
    if (!(tpe.gamma > 0.0 && tpe.gamma <= 1.0) || tpe.n_candidates < 1 || tpe.prior_weight <= 0.0 ||
        tpe.n_startup < 0) {
        throw std::invalid_argument("invalid tpe settings");
    }
}

RunConfig config_from_json(const json &doc) {
    RunConfig c;
    try {
        reject_unknown(doc,
                       {"dataset", "design", "mode", "backend", "trials", "k", "train_fraction",
                        "n_seeds", "max_evals", "shots", "parallelism", "out", "seed", "tpe",
                        "baseline", "rescore_noisy"},
                       "config");
        if (doc.contains("dataset")) {
            const json &d = doc.at("dataset");
            reject_unknown(d, {"kind", "path", "seed", "synthetic"}, "dataset");
            read(d, "kind", c.dataset.kind);
            read(d, "path", c.dataset.path);
            read(d, "seed", c.dataset.seed);
            if (d.contains("synthetic")) {
                const json &s = d.at("synthetic");
                reject_unknown(s,
                               {"n_samples", "majority_fraction", "class_sep", "redundant_noise",
                                "flip_fraction"},
                               "dataset.synthetic");
                read(s, "n_samples", c.dataset.synthetic.n_samples);
                read(s, "majority_fraction", c.dataset.synthetic.majority_fraction);
                read(s, "class_sep", c.dataset.synthetic.class_sep);
                read(s, "redundant_noise", c.dataset.synthetic.redundant_noise);
                read(s, "flip_fraction", c.dataset.synthetic.flip_fraction);
            }
        }
        if (doc.contains("design")) {
            const json &d = doc.at("design");
            reject_unknown(d, {"n_qubits", "n_gates"}, "design");
            read(d, "n_qubits", c.design.n_qubits);
            read(d, "n_gates", c.design.n_gates);
        }
        if (doc.contains("mode")) {
            c.mode = parse_mode(doc.at("mode").get<std::string>());
        }
        read(doc, "backend", c.backend);
        read(doc, "trials", c.trials);
        read(doc, "k", c.k);
        read(doc, "train_fraction", c.train_fraction);
        read(doc, "n_seeds", c.n_seeds);
        read(doc, "max_evals", c.max_evals);
        read(doc, "shots", c.shots);
        read(doc, "parallelism", c.parallelism);
        read(doc, "out", c.out);
        read(doc, "seed", c.seed);
        read(doc, "rescore_noisy", c.rescore_noisy);
        if (doc.contains("tpe")) {
            const json &t = doc.at("tpe");
            reject_unknown(t, {"gamma", "n_candidates", "prior_weight", "n_startup"}, "tpe");
            read(t, "gamma", c.tpe.gamma);
            read(t, "n_candidates", c.tpe.n_candidates);
            read(t, "prior_weight", c.tpe.prior_weight);
            read(t, "n_startup", c.tpe.n_startup);
        }
        if (doc.contains("baseline")) {
            const json &b = doc.at("baseline");
            reject_unknown(b, {"templates", "reps", "entanglements"}, "baseline");
            if (b.contains("templates")) {
                c.baseline.templates.clear();
                for (const auto &t : b.at("templates")) {
                    c.baseline.templates.push_back(parse_template_name(t.get<std::string>()));
                }
            }
            read(b, "reps", c.baseline.reps);
            if (b.contains("entanglements")) {
                c.baseline.entanglements.clear();
                for (const auto &e : b.at("entanglements")) {
                    c.baseline.entanglements.push_back(parse_entanglement(e.get<std::string>()));
                }
            }
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
    return c;
}

json config_to_json(const RunConfig &c) {
    json templates = json::array(), ents = json::array();
    for (auto t : c.baseline.templates) {
        templates.push_back(std::string(to_string(t)));
    }
    for (auto e : c.baseline.entanglements) {
        ents.push_back(std::string(to_string(e)));
    }
    const auto &s = c.dataset.synthetic;
    return json{
        {"dataset",
         {{"kind", c.dataset.kind},
          {"path", c.dataset.path},
          {"seed", c.dataset.seed},
          {"synthetic",
           {{"n_samples", s.n_samples},
            {"majority_fraction", s.majority_fraction},
            {"class_sep", s.class_sep},
            {"redundant_noise", s.redundant_noise},
            {"flip_fraction", s.flip_fraction}}}}},
        {"design", {{"n_qubits", c.design.n_qubits}, {"n_gates", c.design.n_gates}}},
        {"mode", std::string(to_string(c.mode))},
        {"backend", c.backend},
        {"trials", c.trials},
        {"k", c.k},
        {"train_fraction", c.train_fraction},
        {"n_seeds", c.n_seeds},
        {"max_evals", c.max_evals},
        {"shots", c.shots},
        {"parallelism", c.parallelism},
        {"out", c.out},
        {"seed", c.seed},
        {"tpe",
         {{"gamma", c.tpe.gamma},
          {"n_candidates", c.tpe.n_candidates},
          {"prior_weight", c.tpe.prior_weight},
          {"n_startup", c.tpe.n_startup}}},
        {"baseline", {{"templates", templates}, {"reps", c.baseline.reps}, {"entanglements", ents}}},
        {"rescore_noisy", c.rescore_noisy},
    };
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception &e) {
        throw std::invalid_argument("config " + path.string() + " is not valid JSON: " + e.what());
    }
    return config_from_json(doc);
}

std::filesystem::path resolve_input_path(const std::string &path) {
    std::filesystem::path p(path);
    if (p.is_absolute() || std::filesystem::exists(p)) {
        return p;
    }
    auto in_tree = std::filesystem::path(PQCOPT_SOURCE_ROOT) / p;
    return std::filesystem::exists(in_tree) ? in_tree : p;
}

Dataset load_dataset(const DatasetSpec &spec) {
    if (spec.kind == "iris") {
        return spec.path.empty() ? load_iris() : load_iris(resolve_input_path(spec.path));
    }
    if (spec.kind == "synthetic") {
        return gen_synthetic(spec.seed, spec.synthetic);
    }
    if (spec.kind == "csv") {
        return read_csv(resolve_input_path(spec.path));
    }
    throw std::invalid_argument("unknown dataset kind " + spec.kind);
}

} // namespace pqcopt
