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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "support/hidden_target.hpp"

#include "pqcopt/bopt/optimize.hpp"
#include "pqcopt/bopt/space.hpp"
#include "pqcopt/bopt/tpe.hpp"
#include "pqcopt/bopt/trial.hpp"
#include "pqcopt/bopt/trial_log.hpp"

using namespace pqcopt;

namespace {

Trial done(int id, std::vector<double> obj, std::vector<int> a = {}) {
    Trial t;
    t.id = id;
    t.assignment = std::move(a);
    t.objectives = std::move(obj);
    t.state = TrialState::Complete;
    return t;
}

// Reference front: completed trials no other completed trial dominates.
std::vector<int> oracle_front(std::span<const Trial> h) {
    std::vector<int> ids;
    for (const Trial &a : h) {
        if (!a.complete()) continue;
        bool dominated = false;
        for (const Trial &b : h) {
            if (!b.complete() || &a == &b) continue;
            const double a0 = a.objectives[0], a1 = a.objectives[1];
            const double b0 = b.objectives[0], b1 = b.objectives[1];
            if (b0 >= a0 && b1 <= a1 && (b0 > a0 || b1 < a1)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) ids.push_back(a.id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<int> ids_of(const std::vector<Trial> &ts) {
    std::vector<int> ids;
    for (const auto &t : ts) ids.push_back(t.id);
    return ids;
}

} // namespace

// ---------------------------------------------------------------- space

TEST_CASE("genome space dimensions") {
    const auto s = genome_space(DesignParams{4, 5});
    CHECK(s.size() == 32);
    int binary = 0, cat = 0;
    for (const auto &d : s.dimensions()) {
        binary += d.cardinality == 2;
        cat += d.cardinality == 13;
    }
    CHECK(binary == 12);
    CHECK(cat == 20);
    CHECK(s.dimensions()[0].name == "e_0_1");

    const auto small = genome_space(DesignParams{2, 1});
    REQUIRE(small.size() == 4);
    CHECK(small.dimensions()[0].cardinality == 2);
    CHECK(small.dimensions()[1].cardinality == 2);
    CHECK(small.dimensions()[2].cardinality == 7);
    CHECK(small.dimensions()[3].cardinality == 7);
}

TEST_CASE("decoding the zero assignment gives the empty genome") {
    const DesignParams d{4, 5};
    const std::vector<int> zeros(32, 0);
    CHECK(decode_genome(d, zeros) == AnsatzGenome(d));
}

TEST_CASE("assignments and genomes are in bijection") {
    const DesignParams d{3, 4};
    const auto s = genome_space(d);
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto a = s.random_assignment(rng);
        CHECK(s.contains(a));
        CHECK(encode_genome(decode_genome(d, a)) == a);
    }
    std::vector<int> bad(s.size(), 0);
    bad.back() = 99;
    CHECK_FALSE(s.contains(bad));
    CHECK_THROWS(decode_genome(d, bad));
}

// ---------------------------------------------------------------- pareto

TEST_CASE("front of one") {
    const std::vector<Trial> h{done(0, {0.5, 0.5})};
    CHECK(ids_of(pareto_front(h)) == std::vector<int>{0});
}

TEST_CASE("dominance uses natural objective directions") {
    const std::vector<Trial> h{done(0, {0.9, 0.5}), done(1, {0.8, 0.6})};
    CHECK(dominates(h[0], h[1]));
    CHECK_FALSE(dominates(h[1], h[0]));
    CHECK_FALSE(dominates(h[0], h[0]));
    CHECK(ids_of(pareto_front(h)) == std::vector<int>{0});
    CHECK(minimization_vector(h[0]) == std::vector<double>{-0.9, 0.5});
}

TEST_CASE("front matches the all-pairs oracle") {
    std::mt19937_64 rng(200);
    std::uniform_real_distribution<double> u(0, 1);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Trial> h;
        for (int i = 0; i < 200; ++i) {
            // coarse grid so ties and duplicates occur
            h.push_back(done(i, {std::round(u(rng) * 20) / 20, std::round(u(rng) * 20) / 20}));
            if (i % 17 == 5) {
                h.back().state = TrialState::Failed;
            }
            if (i % 10 == 0) {
                CHECK(ids_of(pareto_front(h)) == oracle_front(h));
            }
        }
        CHECK(ids_of(pareto_front(h)) == oracle_front(h));
    }
}

TEST_CASE("non-dominated sorting and crowding") {
    const std::vector<std::vector<double>> pts{{0, 3}, {1, 1}, {3, 0}, {2, 2}, {4, 4}};
    const auto fronts = non_dominated_sort(pts);
    REQUIRE(fronts.size() == 3);
    CHECK(fronts[0] == std::vector<std::size_t>{0, 1, 2});
    CHECK(fronts[1] == std::vector<std::size_t>{3});
    CHECK(fronts[2] == std::vector<std::size_t>{4});
    const auto cd = crowding_distance(pts, fronts[0]);
    CHECK(std::isinf(cd[0]));
    CHECK(std::isinf(cd[2]));
    CHECK(cd[1] == doctest::Approx(2.0)); // (3-0)/3 + (3-0)/3
}

// ---------------------------------------------------------------- tpe

TEST_CASE("startup draws are uniform and seeded") {
    const auto s = genome_space(DesignParams{4, 5});
    Rng a(3), b(3);
    const auto x = tpe_suggest({}, s, a);
    CHECK(x == tpe_suggest({}, s, b));
    CHECK(s.contains(x));
    // the first binary dimension is a fair coin during startup
    Rng r(4);
    int ones = 0;
    for (int i = 0; i < 2000; ++i) {
        ones += tpe_suggest({}, s, r)[0];
    }
    CHECK(std::abs(ones - 1000) < 5 * std::sqrt(500.0));
}

TEST_CASE("tpe follows a value that separates good from bad") {
    const auto s = genome_space(DesignParams{3, 2});
    Rng rng(9);
    std::vector<Trial> h;
    for (int i = 0; i < 40; ++i) {
        auto a = s.random_assignment(rng);
        const bool good = i < 10;
        a[0] = good ? 1 : 0;
        h.push_back(done(i, {good ? 1.0 : 0.0}, a));
    }
    const auto split = tpe_split(h, 0.25);
    CHECK(split.good.size() == 10);
    CHECK(split.bad.size() == 30);
    int hits = 0;
    for (int i = 0; i < 200; ++i) {
        hits += tpe_suggest(h, s, rng)[0] == 1;
    }
    CHECK(hits >= 180);
}

TEST_CASE("tpe split ranks with ties by id and treats pending as bad") {
    std::vector<Trial> h{done(0, {0.5}), done(1, {0.9}), done(2, {0.5}), done(3, {0.1})};
    Trial pending;
    pending.id = 4;
    h.push_back(pending);
    Trial failed = done(5, {});
    failed.state = TrialState::Failed;
    h.push_back(failed);
    const auto sp = tpe_split(h, 0.5); // ceil(0.5 * 4) = 2
    CHECK(sp.good == std::vector<std::size_t>{1, 0});
    CHECK(std::find(sp.bad.begin(), sp.bad.end(), 4) != sp.bad.end());
    CHECK(std::find(sp.bad.begin(), sp.bad.end(), 5) == sp.bad.end());
}

TEST_CASE("constant objective still yields valid suggestions") {
    const auto s = genome_space(DesignParams{4, 2});
    Rng rng(1);
    std::vector<Trial> h;
    for (int i = 0; i < 30; ++i) {
        h.push_back(done(i, {0.5}, s.random_assignment(rng)));
    }
    for (int i = 0; i < 20; ++i) {
        CHECK(s.contains(tpe_suggest(h, s, rng)));
    }
}

TEST_CASE("motpe truncation prefers crowding, then lower id") {
    const std::vector<Trial> h{done(5, {0.9, 0.9}), done(3, {0.5, 0.1})};
    const auto sp = motpe_split(h, 0.25); // ceil(0.5) = 1
    REQUIRE(sp.good.size() == 1);
    CHECK(h[sp.good[0]].id == 3);

    // three-point front: the middle one has finite crowding and goes last
    const std::vector<Trial> h3{done(0, {0.9, 0.9}), done(1, {0.7, 0.5}), done(2, {0.5, 0.1}),
                                done(3, {0.4, 0.9})};
    const auto sp3 = motpe_split(h3, 0.5); // 2 of 4
    CHECK(sp3.good == std::vector<std::size_t>{0, 2});
}

TEST_CASE("motpe startup and arity") {
    const auto s = genome_space(DesignParams{2, 1});
    Rng rng(2);
    const std::vector<Trial> one{done(0, {0.5, 0.5}, {0, 0, 0, 0})};
    CHECK(s.contains(motpe_suggest(one, s, rng)));
    std::vector<Trial> wrong;
    for (int i = 0; i < 12; ++i) {
        wrong.push_back(done(i, {0.5}, s.random_assignment(rng)));
    }
    CHECK_THROWS(motpe_suggest(wrong, s, rng));
}

// ---------------------------------------------------------------- optimize

TEST_CASE("a single trial is the best") {
    const auto s = genome_space(DesignParams{2, 1});
    OptimizeConfig cfg;
    cfg.n_trials = 1;
    const auto r = optimize(fixtures::hidden_target(s, 1), s, cfg);
    REQUIRE(r.history.size() == 1);
    REQUIRE(r.best);
    CHECK(r.best->id == 0);
    CHECK(r.history[0].seed == trial_seed(0, 0));
}

TEST_CASE("tpe beats random search on a hidden target") {
    const auto s = genome_space(DesignParams{4, 5});
    std::vector<double> tpe, rnd;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        OptimizeConfig cfg;
        cfg.n_trials = 100;
        cfg.seed = seed;
        const auto f = fixtures::hidden_target(s, 1000 + seed);
        tpe.push_back(fixtures::best_of(optimize(f, s, cfg)));
        cfg.random_search = true;
        rnd.push_back(fixtures::best_of(optimize(f, s, cfg)));
    }
    std::nth_element(tpe.begin(), tpe.begin() + 10, tpe.end());
    std::nth_element(rnd.begin(), rnd.begin() + 10, rnd.end());
    CHECK(tpe[10] > rnd[10]);
}

TEST_CASE("motpe front dominates more than random search") {
    const auto s = genome_space(DesignParams{4, 5});
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        OptimizeConfig cfg;
        cfg.n_trials = 150;
        cfg.mode = OptimizeConfig::Mode::Multi;
        cfg.seed = seed;
        const auto f = fixtures::target_vs_cardinality(s, 500 + seed);
        const auto mo = optimize(f, s, cfg);
        cfg.random_search = true;
        const auto rs = optimize(f, s, cfg);
        wins += fixtures::hypervolume(mo.history) >= fixtures::hypervolume(rs.history);
        CHECK(ids_of(mo.front) == ids_of(pareto_front(mo.history)));
    }
    CHECK(wins >= 14);
}

TEST_CASE("resuming reproduces an uninterrupted run") {
    const auto s = genome_space(DesignParams{3, 3});
    OptimizeConfig cfg;
    cfg.n_trials = 24;
    cfg.seed = 77;
    const auto f = fixtures::hidden_target(s, 3);
    const auto full = optimize(f, s, cfg);
    std::vector<Trial> prefix(full.history.begin(), full.history.begin() + 13);
    const auto resumed = optimize(f, s, cfg, prefix);
    REQUIRE(resumed.history.size() == 24);
    for (std::size_t i = 0; i < 24; ++i) {
        CHECK(resumed.history[i].assignment == full.history[i].assignment);
        CHECK(resumed.history[i].objectives == full.history[i].objectives);
    }
    std::vector<Trial> gap{full.history[0], full.history[2]};
    CHECK_THROWS(optimize(f, s, cfg, gap));
}

TEST_CASE("evaluator failures are recorded and counted") {
    const auto s = genome_space(DesignParams{2, 2});
    OptimizeConfig cfg;
    cfg.n_trials = 15;
    int recorded = 0;
    cfg.on_record = [&](const Trial &) { ++recorded; };
    const auto r = optimize(
        [](std::span<const int>, const TrialContext &ctx) -> std::vector<double> {
            if (ctx.id % 4 == 1) throw std::runtime_error("boom");
            if (ctx.id % 4 == 2) return {std::nan("")};
            return {static_cast<double>(ctx.id)};
        },
        s, cfg);
    CHECK(r.history.size() == 15);
    CHECK(recorded == 15);
    int failed = 0;
    for (const auto &t : r.history) {
        failed += t.state == TrialState::Failed;
    }
    CHECK(failed == 8);
    CHECK(r.history[1].error == "boom");
    CHECK(r.best->id == 12);
}

TEST_CASE("parallel workers finish every trial") {
    const auto s = genome_space(DesignParams{3, 2});
    OptimizeConfig cfg;
    cfg.n_trials = 30;
    cfg.parallelism = 4;
    const auto r = optimize(fixtures::hidden_target(s, 8), s, cfg);
    REQUIRE(r.history.size() == 30);
    for (int i = 0; i < 30; ++i) {
        CHECK(r.history[static_cast<std::size_t>(i)].id == i);
        CHECK(r.history[static_cast<std::size_t>(i)].complete());
    }
}

// ---------------------------------------------------------------- trial log

TEST_CASE("trial log round-trip and torn lines") {
    const auto path = std::filesystem::temp_directory_path() / "pqcopt_trials_test.jsonl";
    std::filesystem::remove(path);
    Trial a = done(0, {0.75, 0.125}, {1, 0, 3});
    a.seed = 123456789012345ULL;
    a.wall_time = 1.5;
    Trial b = done(1, {}, {0, 0, 0});
    b.state = TrialState::Failed;
    b.error = "bad \"quote\"";
    {
        TrialLogWriter w(path);
        w.write(a);
        w.write(b);
    }
    {
        std::ofstream torn(path, std::ios::app);
        torn << "{\"id\": 2, \"assig";
    }
    {
        TrialLogWriter w(path);
        w.write(done(2, {0.5}, {1, 1, 1}));
    }
    const auto back = read_trial_log(path);
    REQUIRE(back.size() == 3);
    CHECK(back[0].seed == a.seed);
    CHECK(back[0].objectives == a.objectives);
    CHECK(back[1].state == TrialState::Failed);
    CHECK(back[1].error == b.error);
    CHECK(back[2].assignment == std::vector<int>{1, 1, 1});
    {
        std::ofstream junk(path, std::ios::app);
        junk << "{\"not\": \"a trial\"}\n";
    }
    CHECK_THROWS(read_trial_log(path));
    std::filesystem::remove(path);
    CHECK(parse_trial_state(to_string(TrialState::Pending)) == TrialState::Pending);
}
