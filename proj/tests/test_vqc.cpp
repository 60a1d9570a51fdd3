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

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "pqcopt/circuit/templates.hpp"
#include "pqcopt/common/random.hpp"
#include "pqcopt/data/dataset.hpp"
#include "pqcopt/transpile/backend.hpp"
#include "pqcopt/vqc/cobyla.hpp"
#include "pqcopt/vqc/evaluate.hpp"
#include "pqcopt/vqc/model.hpp"
#include "pqcopt/vqc/train.hpp"

using namespace pqcopt;
using std::numbers::pi;

namespace {

std::shared_ptr<const BackendSnapshot> manila() {
    static auto b = std::make_shared<const BackendSnapshot>(
        load_backend_snapshot(bundled_backend_path("manila")));
    return b;
}

Circuit hadamards(int n) {
    Circuit c(n);
    for (int q = 0; q < n; ++q) {
        c.append(Gate::one(GateKind::H, q));
    }
    return c;
}

// Two well separated blobs already in [0, pi].
Dataset toy_blobs(std::uint64_t seed, int n_per_class) {
    Dataset ds;
    ds.name = "blobs";
    ds.n_classes = 2;
    Rng rng(seed);
    for (int c = 0; c < 2; ++c) {
        const double centre = c == 0 ? 0.5 : 2.6;
        for (int i = 0; i < n_per_class; ++i) {
            ds.features.push_back({centre + 0.2 * standard_normal(rng), centre + 0.2 * standard_normal(rng)});
            ds.labels.push_back(c);
        }
    }
    return ds;
}

} // namespace

// ---------------------------------------------------------------- prediction

TEST_CASE("trivial classifier predicts the zero class") {
    const VqcModel m(FeatureMap::fixed(Circuit(1)), Circuit(1), 2);
    const auto p = predict_proba(m, std::vector<double>{}, 128, 1, Execution::ideal());
    CHECK(p == std::vector<double>{1.0, 0.0});
}

TEST_CASE("uniform superposition splits by parity of the outcome") {
    const VqcModel m(FeatureMap::fixed(hadamards(2)), Circuit(2), 2);
    const auto p = predict_proba(m, std::vector<double>{}, 100000, 3, Execution::ideal());
    CHECK(p[0] == doctest::Approx(0.5).epsilon(0.02));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(0.02));
    CHECK(std::abs(p[0] - 0.5) <= 0.01);

    // three classes over 2 qubits: outcomes 0..3 -> classes 0,1,2,0
    const VqcModel m3(FeatureMap::fixed(hadamards(2)), Circuit(2), 3);
    const auto q = predict_proba(m3, std::vector<double>{}, 100000, 3, Execution::ideal());
    CHECK(std::abs(q[0] - 0.5) <= 0.01);
    CHECK(std::abs(q[1] - 0.25) <= 0.01);
}

TEST_CASE("composed circuit puts theta slots first") {
    const Circuit ansatz = template_circuit(TemplateName::RealAmplitudes, 2, 1, Entanglement::Linear);
    const VqcModel m(FeatureMap::zz(2), ansatz, 2);
    CHECK(m.composed().n_params() == ansatz.n_params() + 3);
    const std::vector<double> theta{1, 2, 3, 4}, x{0.5, 1.5};
    const auto bound = m.bind(theta, x);
    CHECK(bound.size() == 7);
    CHECK(bound[0] == 1.0);
    CHECK(bound[4] == doctest::Approx(1.0));
    CHECK_THROWS(VqcModel(FeatureMap::zz(3), ansatz, 2));
    CHECK_THROWS(VqcModel(FeatureMap::zz(2), ansatz, 5));
}

TEST_CASE("noisy prediction goes through the transpiled program") {
    const VqcModel m(FeatureMap::zz(4), template_circuit(TemplateName::RealAmplitudes, 4, 1, Entanglement::Full), 3);
    const auto exec = Execution::noisy(manila());
    std::vector<double> theta(static_cast<std::size_t>(m.ansatz().n_params()), 0.3);
    const std::vector<double> x{0.1, 0.7, 1.9, 3.0};
    const auto p = predict_proba(m, theta, x, 512, 4, exec);
    CHECK(p[0] + p[1] + p[2] == doctest::Approx(1.0));
    CHECK(p == predict_proba(m, theta, x, 512, 4, exec));
    CHECK(&m.noisy_program(*manila()) == &m.noisy_program(*manila()));
    CHECK(model_complexity(m, *manila()) > 0.0);

    const VqcModel empty(FeatureMap::fixed(Circuit(2)), Circuit(2), 2);
    CHECK(model_complexity(empty, *manila()) == 0.0);
}

// ---------------------------------------------------------------- loss

TEST_CASE("cross entropy") {
    const std::vector<std::vector<double>> onehot{{1, 0}, {0, 1}};
    const std::vector<int> l01{0, 1};
    CHECK(cross_entropy(onehot, l01) == doctest::Approx(0.0));

    const std::vector<std::vector<double>> uniform{{0.5, 0.5}, {0.5, 0.5}};
    CHECK(cross_entropy(uniform, l01) == doctest::Approx(std::log(2.0)));
    CHECK(cross_entropy(uniform, l01) == doctest::Approx(0.6931).epsilon(1e-4));

    // -(ln .7 + ln .8 + ln .5) / 3
    const std::vector<std::vector<double>> three{{0.7, 0.3}, {0.2, 0.8}, {0.5, 0.5}};
    const std::vector<int> l{0, 1, 1};
    CHECK(std::abs(cross_entropy(three, l) - 0.42432189193) < 1e-9);

    // a zero probability is clamped, not infinite
    const std::vector<std::vector<double>> wrong{{0.0, 1.0}};
    const std::vector<int> l0{0};
    CHECK(cross_entropy(wrong, l0) == doctest::Approx(-std::log(1e-10)));
}

TEST_CASE("loss is a deterministic function of theta") {
    const Dataset ds = toy_blobs(1, 10);
    const VqcModel m(FeatureMap::zz(2), template_circuit(TemplateName::RealAmplitudes, 2, 1, Entanglement::Linear), 2);
    const std::vector<double> th{0.1, 0.2, 0.3, 0.4};
    CHECK(loss(m, th, ds, 256, 5, Execution::ideal()) == loss(m, th, ds, 256, 5, Execution::ideal()));
}

TEST_CASE("accuracy uses the argmax class") {
    const VqcModel m(FeatureMap::fixed(Circuit(1)), Circuit(1), 2);
    Dataset ds;
    ds.n_classes = 2;
    ds.features = {{0.0}, {0.0}, {0.0}, {0.0}};
    ds.labels = {0, 0, 0, 1};
    CHECK(accuracy(m, ds, 64, 1, Execution::ideal()) == doctest::Approx(0.75));

    // X on qubit 0 gives outcome 0b10 -> class 2 with certainty
    Circuit flip(2);
    flip.append(Gate::one(GateKind::X, 0));
    const VqcModel fixed3(FeatureMap::fixed(flip), Circuit(2), 3);
    ds.n_classes = 3;
    ds.labels = {2, 2, 0, 1};
    CHECK(accuracy(fixed3, ds, 16, 1, Execution::ideal()) == doctest::Approx(0.5));
}

// ---------------------------------------------------------------- cobyla

TEST_CASE("cobyla on a shifted quadratic") {
    int calls = 0;
    const Objective f = [&](std::span<const double> x) {
        ++calls;
        return (x[0] - 1) * (x[0] - 1) + (x[1] - 2) * (x[1] - 2);
    };
    const auto r = cobyla_minimize(f, {0.0, 0.0}, {100, 1.0, 1e-6});
    CHECK(std::abs(r.x[0] - 1) < 1e-3);
    CHECK(std::abs(r.x[1] - 2) < 1e-3);
    CHECK(r.evals == calls);
    CHECK(calls <= 100);
}

TEST_CASE("cobyla respects a d+2 budget exactly") {
    for (int d : {1, 2, 5}) {
        int calls = 0;
        const Objective f = [&](std::span<const double> x) {
            ++calls;
            double s = 0;
            for (double v : x) {
                s += std::cos(3 * v) + v * v;
            }
            return s;
        };
        const auto r = cobyla_minimize(f, std::vector<double>(static_cast<std::size_t>(d), 0.3),
                                       {d + 2, 1.0, 1e-4});
        CHECK(calls == d + 2);
        CHECK(r.evals == d + 2);
    }
}

TEST_CASE("cobyla makes progress on rosenbrock") {
    const Objective f = [](std::span<const double> x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
    };
    const auto r = cobyla_minimize(f, {-1.2, 1.0}, {500, 1.0, 1e-8});
    CHECK(r.f < 24.2 / 4);
    CHECK(r.evals <= 500);
}

TEST_CASE("cobyla input checks") {
    const Objective f = [](std::span<const double> x) { return x[0]; };
    CHECK_THROWS(cobyla_minimize(f, {}, {}));
    CHECK_THROWS(cobyla_minimize(f, {0.0}, {2, 1.0, 1e-4}));
    CHECK_THROWS(cobyla_minimize(f, {0.0}, {10, 0.1, 1.0}));
    const Objective bad = [](std::span<const double>) { return std::nan(""); };
    CHECK_THROWS_AS(cobyla_minimize(bad, {0.0}, {}), std::domain_error);
}

// ---------------------------------------------------------------- training

TEST_CASE("parameter-free models skip training") {
    const VqcModel m(FeatureMap::zz(2), Circuit(2), 2);
    const auto r = train(m, toy_blobs(1, 5), TrainConfig{}, Execution::ideal());
    CHECK(r.model.theta().empty());
    CHECK(r.evals == 0);
}

TEST_CASE("training is seeded and never worse than the start") {
    const Dataset ds = toy_blobs(2, 8);
    const VqcModel m(FeatureMap::zz(2), template_circuit(TemplateName::RealAmplitudes, 2, 1, Entanglement::Linear), 2);
    TrainConfig cfg;
    cfg.max_evals = 20;
    cfg.shots = 256;
    cfg.seed = 11;
    const auto a = train(m, ds, cfg, Execution::ideal());
    const auto b = train(m, ds, cfg, Execution::ideal());
    CHECK(std::vector<double>(a.model.theta().begin(), a.model.theta().end()) ==
          std::vector<double>(b.model.theta().begin(), b.model.theta().end()));
    CHECK(a.final_loss <= a.initial_loss);
    CHECK(a.evals <= 20);
    for (double t : a.model.theta()) {
        CHECK(std::isfinite(t));
    }
}

TEST_CASE("separable blobs are learned") {
    const Dataset ds = toy_blobs(3, 20);
    const VqcModel m(FeatureMap::zz(2), template_circuit(TemplateName::RealAmplitudes, 2, 1, Entanglement::Linear), 2);
    double best = 0.0;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        TrainConfig cfg;
        cfg.max_evals = 100;
        cfg.shots = 1024;
        cfg.seed = seed;
        const auto r = train(m, ds, cfg, Execution::ideal());
        best = std::max(best, accuracy(r.model, ds, 1024, 99, Execution::ideal()));
    }
    CHECK(best >= 0.9);
}

// ---------------------------------------------------------------- evaluation

TEST_CASE("majority predictor scores the majority share") {
    const VqcModel m(FeatureMap::fixed(Circuit(1)), Circuit(1), 2);
    EvalConfig cfg;
    cfg.k = 3;
    cfg.n_seeds = 2;
    const auto r = kfold_evaluate(m, gen_synthetic(0), cfg, Execution::ideal());
    CHECK(r.accuracies.size() == 6);
    CHECK(r.mean == doctest::Approx(0.65));
    CHECK(r.std == doctest::Approx(0.0));
}

TEST_CASE("k-fold reports do not depend on parallelism") {
    const Dataset iris = load_iris();
    const Circuit ansatz = template_circuit(TemplateName::RealAmplitudes, 4, 1, Entanglement::Linear);
    EvalConfig cfg;
    cfg.k = 2;
    cfg.n_seeds = 2;
    cfg.max_evals = 12;
    cfg.shots = 128;
    cfg.seed = 4;
    const auto a = kfold_evaluate(ansatz, iris, cfg, Execution::ideal());
    cfg.parallelism = 3;
    const auto b = kfold_evaluate(ansatz, iris, cfg, Execution::ideal());
    CHECK(a.accuracies == b.accuracies);
    CHECK(a.seed_means.size() == 2);
    for (double acc : a.accuracies) {
        CHECK((acc >= 0.0 && acc <= 1.0));
    }

    cfg.k = 1;
    cfg.n_seeds = 1;
    const auto n1 = kfold_evaluate(ansatz, iris, cfg, Execution::noisy(manila()));
    const auto n2 = kfold_evaluate(ansatz, iris, cfg, Execution::noisy(manila()));
    CHECK(n1.accuracies == n2.accuracies);
    CHECK(n1.mode == "noisy");
}

TEST_CASE("report serialisation") {
    EvalReport r;
    r.dataset = "iris";
    r.ansatz_id = "x";
    r.mode = "ideal";
    r.k = 2;
    r.n_seeds = 2;
    r.accuracies = {0.5, 0.7, 0.9, 0.1};
    r.finalize();
    CHECK(r.mean == doctest::Approx(0.55));
    REQUIRE(r.seed_means.size() == 2); // seed-major: {0.5, 0.7}, {0.9, 0.1}
    CHECK(r.seed_means[0] == doctest::Approx(0.6));
    CHECK(r.seed_means[1] == doctest::Approx(0.5));
    const auto back = EvalReport::from_json(r.to_json());
    CHECK(back.accuracies == r.accuracies);
    CHECK(back.mean == r.mean);
    CHECK(back.std == r.std);
    CHECK(EvalReport::csv_header() == "dataset,ansatz_id,mode,mean,std,k,seeds");
    CHECK(r.csv_row().rfind("iris,x,ideal,", 0) == 0);
}

TEST_CASE("summary statistics") {
    const std::vector<double> a{1, 1, 2, 2}, b{0, 0, 1, 1};
    CHECK(mean(a) == 1.5);
    CHECK(stddev(a) == doctest::Approx(0.5));
    CHECK(cohens_d(a, b) == doctest::Approx(1.7320508).epsilon(1e-6));
    CHECK(cohens_d(a, a) == 0.0);
    const std::vector<double> same{0.3, 0.3, 0.3};
    CHECK(cohens_d(same, same) == 0.0);
    const std::vector<double> one{1.0};
    CHECK_THROWS(cohens_d(one, a));
}
