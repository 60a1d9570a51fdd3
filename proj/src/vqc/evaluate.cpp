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

#include "pqcopt/vqc/evaluate.hpp"

#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace pqcopt {

using nlohmann::json;

namespace {

constexpr std::uint64_t kSplitStream = 0x5eed0001;
constexpr std::uint64_t kTrainStream = 0x5eed0002;
constexpr std::uint64_t kScoreStream = 0x5eed0003;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << v;
    return os.str();
}

} // namespace

double mean(std::span<const double> xs) {
    if (xs.empty()) {
        throw std::invalid_argument("mean of an empty sample");
    }
    double s = 0.0;
    for (double x : xs) {
        s += x;
    }
    return s / static_cast<double>(xs.size());
}

double stddev(std::span<const double> xs) {
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) {
        s += (x - m) * (x - m);
    }
    return std::sqrt(s / static_cast<double>(xs.size()));
}

double cohens_d(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("cohens_d needs at least 2 values per sample");
    }
    auto ss = [](std::span<const double> xs, double m) {
        double s = 0.0;
        for (double x : xs) {
            s += (x - m) * (x - m);
        }
        return s;
    };
    const double ma = mean(a), mb = mean(b);
    const double pooled = std::sqrt((ss(a, ma) + ss(b, mb)) /
                                    static_cast<double>(a.size() + b.size() - 2));
    if (pooled == 0.0) {
        if (ma == mb) {
            return 0.0;
        }
        throw std::domain_error("cohens_d: zero pooled standard deviation");
    }
    return (ma - mb) / pooled;
}

void EvalReport::finalize() {
    if (accuracies.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(n_seeds) ||
        accuracies.empty()) {
        throw std::logic_error("EvalReport: accuracy count does not match k x n_seeds");
    }
    mean = pqcopt::mean(accuracies);
    std = stddev(accuracies);
    seed_means.clear();
    for (int s = 0; s < n_seeds; ++s) {
        seed_means.push_back(pqcopt::mean(std::span(accuracies).subspan(
            static_cast<std::size_t>(s * k), static_cast<std::size_t>(k))));
    }
}

json EvalReport::to_json() const {
    return json{{"dataset", dataset},   {"ansatz_id", ansatz_id},   {"mode", mode},
                {"k", k},               {"n_seeds", n_seeds},       {"accuracies", accuracies},
                {"mean", mean},         {"std", std},               {"seed_means", seed_means}};
}

EvalReport EvalReport::from_json(const json &doc) {
    EvalReport r;
    r.dataset = doc.at("dataset").get<std::string>();
    r.ansatz_id = doc.at("ansatz_id").get<std::string>();
    r.mode = doc.at("mode").get<std::string>();
    r.k = doc.at("k").get<int>();
    r.n_seeds = doc.at("n_seeds").get<int>();
    r.accuracies = doc.at("accuracies").get<std::vector<double>>();
    r.finalize();
    return r;
}

std::string EvalReport::csv_header() { return "dataset,ansatz_id,mode,mean,std,k,seeds"; }

std::string EvalReport::csv_row() const {
    return dataset + "," + ansatz_id + "," + mode + "," + fmt(mean) + "," + fmt(std) + "," +
           std::to_string(k) + "," + std::to_string(n_seeds);
}

EvalReport kfold_evaluate(const VqcModel &prototype, const Dataset &data, const EvalConfig &cfg,
                          const Execution &exec) {
    if (cfg.k < 1 || cfg.n_seeds < 1 || cfg.shots < 1) {
        throw std::invalid_argument("kfold_evaluate: k, n_seeds and shots must be positive");
    }
    if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) {
        throw std::invalid_argument("kfold_evaluate: train_fraction must be in (0, 1)");
    }
    data.validate();

    struct Fold {
        Dataset train, val;
    };
    std::vector<Fold> folds;
    for (int f = 0; f < cfg.k; ++f) {
        Rng rng(derive_seed(cfg.seed, {kSplitStream, static_cast<std::uint64_t>(f)}));
        auto [tr, va] = stratified_split(data.labels, cfg.train_fraction, rng);
        if (va.empty()) {
            throw std::invalid_argument("kfold_evaluate: empty validation split");
        }
        auto [scaled, params] = scale_features(data, tr);
        Fold fold{scaled.subset(tr), scaled.subset(va)};
        if (fold.train.class_histogram().size() != static_cast<std::size_t>(data.n_classes)) {
            throw std::invalid_argument("kfold_evaluate: a class is absent from a training split");
        }
        folds.push_back(std::move(fold));
    }

    if (exec.is_noisy()) {
        // Transpile once; job copies share the cached program read-only.
        prototype.noisy_program(*exec.backend);
    }
    const int jobs = cfg.k * cfg.n_seeds;
    std::vector<double> acc(static_cast<std::size_t>(jobs), 0.0);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, cfg.parallelism))
    for (int j = 0; j < jobs; ++j) {
        try {
            const int s = j / cfg.k;
            const int f = j % cfg.k;
            const auto fs = static_cast<std::uint64_t>(f);
            const auto ss = static_cast<std::uint64_t>(s);
            const Fold &fold = folds[static_cast<std::size_t>(f)];
            TrainConfig tc{cfg.max_evals, cfg.shots, derive_seed(cfg.seed, {kTrainStream, fs, ss})};
            TrainResult r = train(prototype, fold.train, tc, exec);
            acc[static_cast<std::size_t>(j)] =
                accuracy(r.model, fold.val, cfg.shots, derive_seed(cfg.seed, {kScoreStream, fs, ss}),
                         exec);
        } catch (...) {
#pragma omp critical(pqcopt_kfold_error)
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    EvalReport rep;
    rep.dataset = data.name;
    rep.mode = exec.is_noisy() ? "noisy" : "ideal";
    rep.k = cfg.k;
    rep.n_seeds = cfg.n_seeds;
    rep.accuracies = std::move(acc);
    rep.finalize();
    return rep;
}

EvalReport kfold_evaluate(const Circuit &ansatz, const Dataset &data, const EvalConfig &cfg,
                          const Execution &exec) {
    VqcModel proto(FeatureMap::zz(static_cast<int>(data.n_features())), ansatz, data.n_classes);
    return kfold_evaluate(proto, data, cfg, exec);
}

} // namespace pqcopt
