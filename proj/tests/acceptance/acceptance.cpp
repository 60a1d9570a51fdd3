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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "support/dense_oracle.hpp"
#include "support/genomes.hpp"
#include "support/hidden_target.hpp"

#include "pqcopt/bopt/optimize.hpp"
#include "pqcopt/bopt/space.hpp"
#include "pqcopt/bopt/trial.hpp"
#include "pqcopt/circuit/ansatz.hpp"
#include "pqcopt/circuit/search_space.hpp"
#include "pqcopt/cli/commands.hpp"
#include "pqcopt/qsim/statevector.hpp"
#include "pqcopt/transpile/backend.hpp"
#include "pqcopt/transpile/transpile.hpp"
#include "pqcopt/vqc/cobyla.hpp"

using namespace pqcopt;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Runner {
    int failures = 0;

    void run(int id, const char *name, const std::function<Outcome()> &check) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %-24s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---------------------------------------------------------------- 1

Outcome simulator_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const int depth = 1 + static_cast<int>(rng() % 10);
        const Circuit c = oracle::random_circuit(4, depth, rng);
        const auto ref = oracle::apply(oracle::circuit_unitary(c, {}), oracle::zero_state(4));
        const Statevector sv = run_statevector(c, {});
        for (std::size_t i = 0; i < ref.size(); ++i) {
            worst = std::max(worst, std::abs(sv[i] - ref[i]));
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-9 && secs < 10, fmt("max amplitude error %.2e", worst)};
}

// ---------------------------------------------------------------- 2

Outcome transpiler_fidelity() {
    const auto t0 = std::chrono::steady_clock::now();
    const BackendSnapshot b = load_backend_snapshot(bundled_backend_path("manila"));
    const std::set<GateKind> allowed{GateKind::ID, GateKind::RZ, GateKind::SX,
                                     GateKind::X, GateKind::CX, GateKind::RESET};
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0, 2 * pi);
    double worst = 1.0;
    int bad_basis = 0, bad_coupling = 0;
    for (int t = 0; t < 100; ++t) {
        const Circuit c = postprocess(build_ansatz(fixtures::random_genome(DesignParams{4, 5}, rng)));
        std::vector<double> p(static_cast<std::size_t>(c.n_params()));
        for (auto &v : p) {
            v = u(rng);
        }
        const TranspiledCircuit tc = transpile(c, b);
        for (const Gate &g : tc.circuit.gates()) {
            bad_basis += !allowed.contains(g.kind);
            bad_coupling += g.kind == GateKind::CX && !b.coupled(g.qubits[0], g.qubits[1]);
        }
        const auto logical = oracle::apply(oracle::circuit_unitary(c, p), oracle::zero_state(4));
        const Statevector embedded =
            embed_logical(Statevector::from_amplitudes(logical), tc.layout, tc.circuit.n_qubits());
        const auto phys = oracle::apply(oracle::circuit_unitary(tc.circuit, p),
                                        oracle::zero_state(tc.circuit.n_qubits()));
        worst = std::min(worst, oracle::fidelity(embedded.amplitudes(), phys));
    }
    const double secs = seconds_since(t0);
    return {worst >= 1 - 1e-8 && bad_basis == 0 && bad_coupling == 0 && secs < 30,
            fmt("min fidelity 1-%.1e, off-basis %d, uncoupled cx %d", 1 - worst, bad_basis, bad_coupling)};
}

// ---------------------------------------------------------------- 3

// Schoolbook decimal arithmetic, least significant digit first.
std::string decimal_power_product(const std::vector<std::pair<int, int>> &factors) {
    std::vector<int> d{1};
    for (const auto &[base, exp] : factors) {
        for (int e = 0; e < exp; ++e) {
            int carry = 0;
            for (int &x : d) {
                const int v = x * base + carry;
                x = v % 10;
                carry = v / 10;
            }
            for (; carry; carry /= 10) {
                d.push_back(carry % 10);
            }
        }
    }
    std::string s;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        s += static_cast<char>('0' + *it);
    }
    return s;
}

Outcome cardinality() {
    const int n = 4, g = 5;
    // mask bits off the diagonal; per cell: none, 3 rotations, 3 per other qubit
    const int cell = 1 + 3 + 3 * (n - 1);
    const std::string expect = decimal_power_product({{2, n * (n - 1)}, {cell, n * g}});
    const BigInt size = search_space_size(DesignParams{n, g});
    std::ostringstream os;
    os << size;
    const std::string sci = to_scientific(size, 3);
    return {sci == "7.78e25" && os.str() == expect, sci + " = " + os.str()};
}

// ---------------------------------------------------------------- 4

Outcome tpe_guidance() {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchSpace s = genome_space(DesignParams{4, 5});
    std::vector<double> tpe, rnd;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        OptimizeConfig cfg;
        cfg.n_trials = 100;
        cfg.seed = seed;
        const auto f = fixtures::hidden_target(s, 9000 + seed);
        tpe.push_back(fixtures::best_of(optimize(f, s, cfg)));
        cfg.random_search = true;
        rnd.push_back(fixtures::best_of(optimize(f, s, cfg)));
    }
    const double mt = median(tpe), mr = median(rnd);
    const double secs = seconds_since(t0);
    return {mt > mr && secs < 60, fmt("median best tpe %.4f vs random %.4f", mt, mr)};
}

// ---------------------------------------------------------------- 5

Outcome pareto_correctness() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<Trial> h;
    for (int i = 0; i < 200; ++i) {
        Trial t;
        t.id = i;
        t.state = TrialState::Complete;
        // a coarse grid makes ties and duplicates likely
        t.objectives = {std::round(u(rng) * 25) / 25, std::round(u(rng) * 25) / 25};
        h.push_back(t);
    }
    std::vector<int> expect;
    for (const Trial &a : h) {
        bool dominated = false;
        for (const Trial &b : h) {
            const bool no_worse = b.objectives[0] >= a.objectives[0] && b.objectives[1] <= a.objectives[1];
            const bool better = b.objectives[0] > a.objectives[0] || b.objectives[1] < a.objectives[1];
            dominated = dominated || (no_worse && better);
        }
        if (!dominated) {
            expect.push_back(a.id);
        }
    }
    std::vector<int> got;
    for (const Trial &t : pareto_front(h)) {
        got.push_back(t.id);
    }
    std::sort(got.begin(), got.end());
    const double secs = seconds_since(t0);
    return {got == expect && secs < 1, fmt("front of %zu trials, oracle %zu", got.size(), expect.size())};
}

// ---------------------------------------------------------------- 6

Outcome optimizer_sanity() {
    int qcalls = 0;
    const Objective quad = [&](std::span<const double> x) {
        ++qcalls;
        return (x[0] - 1) * (x[0] - 1) + (x[1] - 2) * (x[1] - 2);
    };
    const auto q = cobyla_minimize(quad, {0.0, 0.0}, {100, 1.0, 1e-6});
    const double qerr = std::max(std::abs(q.x[0] - 1), std::abs(q.x[1] - 2));

    int rcalls = 0;
    const Objective rosen = [&](std::span<const double> x) {
        ++rcalls;
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
    };
    const auto r = cobyla_minimize(rosen, {-1.2, 1.0}, {500, 1.0, 1e-8});
    const bool pass = qerr <= 1e-3 && qcalls <= 100 && r.f <= 0.5 && rcalls <= 500;
    return {pass, fmt("quadratic err %.1e in %d evals; rosenbrock f %.4f in %d evals", qerr, qcalls, r.f, rcalls)};
}

// ---------------------------------------------------------------- 7-9

struct DeskRuns {
    fs::path root;
    int parallelism = 1;

    RunConfig config(const std::string &dataset, std::uint64_t seed, const std::string &name) const {
        RunConfig c;
        c.dataset.kind = dataset;
        if (dataset == "synthetic") {
            c.dataset.synthetic.n_samples = 300;
        }
        c.design = DesignParams{4, 5};
        c.backend = "backends/manila.json";
        c.trials = 30;
        c.k = 3;
        c.n_seeds = 1;
        c.max_evals = 50;
        c.shots = 1024;
        c.parallelism = parallelism;
        c.seed = seed;
        c.force = true;
        c.out = (root / (dataset + "_" + name + "_" + std::to_string(seed))).string();
        return c;
    }
};

struct IdealRun {
    double best = 0.0, best_template = 0.0, minutes = 0.0;
    std::optional<double> complexity, noisy;
};

IdealRun ideal_run(const DeskRuns &d, const std::string &dataset, std::uint64_t seed, bool rescore) {
    const auto t0 = std::chrono::steady_clock::now();
    IdealRun r;
    RunConfig c = d.config(dataset, seed, "ideal");
    c.rescore_noisy = rescore;
    const SearchResult s = cmd_search(c);
    r.best = s.best_report.mean;
    r.complexity = s.best_complexity;
    if (s.noisy_report) {
        r.noisy = s.noisy_report->mean;
    }
    const BaselineResult b = cmd_baseline(d.config(dataset, seed, "baseline"));
    for (const auto &row : b.rows) {
        r.best_template = std::max(r.best_template, row.report.mean);
    }
    r.minutes = seconds_since(t0) / 60;
    return r;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"acceptance checks"};
    int parallelism = 1;
    std::string work = (fs::temp_directory_path() / "pqcopt_acceptance").string();
    app.add_option("--parallelism", parallelism, "worker threads for the end-to-end runs");
    app.add_option("--work", work, "scratch directory");
    CLI11_PARSE(app, argc, argv);
    fs::create_directories(work);
    const DeskRuns desk{work, parallelism};

    Runner run;
    run.run(1, "simulator-oracle", simulator_oracle);
    run.run(2, "transpiler-fidelity", transpiler_fidelity);
    run.run(3, "search-space-size", cardinality);
    run.run(4, "tpe-guidance", tpe_guidance);
    run.run(5, "pareto-front", pareto_correctness);
    run.run(6, "optimizer-sanity", optimizer_sanity);

    // seed 0 also carries the noisy re-score used below
    std::vector<IdealRun> iris;
    run.run(7, "desk-iris-ideal", [&] {
        int wins = 0;
        std::string detail;
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            iris.push_back(ideal_run(desk, "iris", seed, seed == 0));
            const IdealRun &r = iris.back();
            const bool ok = r.best >= 0.85 && r.best >= r.best_template && r.minutes < 30;
            wins += ok;
            detail += fmt("seed %d: %.4f vs template %.4f%s; ", static_cast<int>(seed), r.best,
                          r.best_template, ok ? "" : " (miss)");
        }
        return Outcome{wins >= 2, detail + fmt("%d/3 seeds", wins)};
    });

    run.run(8, "noise-degradation", [&] {
        if (iris.empty() || !iris[0].noisy) {
            return Outcome{false, "no ideal run to re-score"};
        }
        const double drop = iris[0].best - *iris[0].noisy;
        return Outcome{drop >= 0.05, fmt("ideal %.4f -> noisy %.4f (drop %.4f)", iris[0].best, *iris[0].noisy, drop)};
    });

    run.run(9, "complexity-ordering", [&] {
        std::string detail;
        for (const std::string ds : {"iris", "synthetic"}) {
            const double ideal = ds == "iris" && !iris.empty()
                                     ? *iris[0].complexity
                                     : *ideal_run(desk, ds, 0, false).complexity;
            RunConfig nc = desk.config(ds, 0, "noisy");
            nc.mode = RunConfig::Mode::Noisy;
            const double noisy = *cmd_search(nc).best_complexity;
            RunConfig mc = desk.config(ds, 0, "mo");
            mc.rescore_noisy = true;
            const MoResult mo = cmd_search_mo(mc);
            const double sel = mo.front.at(*mo.selected).trial.objectives[1];
            detail += fmt("%s: mo %.4f, noisy %.4f, ideal %.4f; ", ds.c_str(), sel, noisy, ideal);
            if (sel < noisy && noisy < ideal) {
                return Outcome{true, detail + "ordered on " + ds};
            }
        }
        return Outcome{false, detail + "ordered on neither"};
    });

    run.run(10, "postprocess-soundness", [] {
        std::mt19937_64 rng(10);
        std::uniform_real_distribution<double> u(-2 * pi, 2 * pi);
        int not_idempotent = 0, grew = 0;
        double worst = 0.0;
        for (int t = 0; t < 500; ++t) {
            const Circuit orig = build_ansatz(fixtures::random_genome(DesignParams{4, 5}, rng));
            const auto r = postprocess_with_map(orig);
            not_idempotent += postprocess(r.circuit) != r.circuit;
            grew += r.circuit.size() > orig.size();
            std::vector<double> th(static_cast<std::size_t>(r.circuit.n_params()));
            for (auto &v : th) {
                v = u(rng);
            }
            // dropped slots get zero, which is what removing them means
            std::vector<double> matched(r.slot_map.size(), 0.0);
            for (std::size_t s = 0; s < matched.size(); ++s) {
                if (r.slot_map[s] >= 0) {
                    matched[s] = th[static_cast<std::size_t>(r.slot_map[s])];
                }
            }
            const auto a = run_statevector(orig, matched).probabilities();
            const auto b = run_statevector(r.circuit, th).probabilities();
            for (std::size_t i = 0; i < a.size(); ++i) {
                worst = std::max(worst, std::abs(a[i] - b[i]));
            }
        }
        return Outcome{not_idempotent == 0 && grew == 0 && worst <= 1e-9,
                       fmt("non-idempotent %d, grew %d, max prob diff %.2e", not_idempotent, grew, worst)};
    });

    run.run(11, "byte-reproducibility", [&] {
        const fs::path dir = fs::path(work) / "repro";
        fs::remove_all(dir);
        fs::create_directories(dir);
        {
            std::ofstream(dir / "tiny.json") << R"({
  "dataset": {"kind": "synthetic", "synthetic": {"n_samples": 60}},
  "design": {"n_qubits": 4, "n_gates": 2},
  "backend": "backends/manila.json",
  "trials": 4, "k": 2, "n_seeds": 1, "max_evals": 10, "shots": 128, "seed": 21,
  "baseline": {"reps": [1], "entanglements": ["linear"]}
})";
        }
        const std::string cli = PQCOPT_CLI_PATH;
        const std::string cfg = (dir / "tiny.json").string();
        const std::vector<std::pair<std::string, std::string>> cmds{
            {"gen-data", "gen-data"},       {"baseline", "baseline"},
            {"search", "search --rescore"}, {"search-noisy", "search-noisy"},
            {"search-mo", "search-mo --rescore"}};
        std::string differing;
        int ran = 0;
        std::vector<std::string> report_inputs;
        for (const auto &[name, args] : cmds) {
            const std::string out = (dir / name).string();
            const std::string line = cli + " " + args + " --config " + cfg + " --out " + out +
                                     " --parallelism 1 --force > /dev/null 2>&1";
            std::string first;
            for (int rep = 0; rep < 2; ++rep) {
                if (std::system(line.c_str()) != 0) {
                    return Outcome{false, name + " exited non-zero"};
                }
                const std::string now = slurp(fs::path(out) / "summary.csv");
                if (rep == 0) {
                    first = now;
                } else if (now != first || now.empty()) {
                    differing += name + " ";
                }
            }
            ++ran;
            if (name != "gen-data") {
                report_inputs.push_back(out);
            }
        }
        std::string rline = cli + " report";
        for (const auto &p : report_inputs) {
            rline += " " + p;
        }
        rline += " --out " + (dir / "report").string() + " --force > /dev/null 2>&1";
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            if (std::system(rline.c_str()) != 0) {
                return Outcome{false, "report exited non-zero"};
            }
            const std::string now = slurp(dir / "report" / "summary.csv");
            if (rep == 0) {
                first = now;
            } else if (now != first || now.empty()) {
                differing += "report ";
            }
        }
        ++ran;
        return Outcome{differing.empty(), fmt("%d subcommands, differing: %s", ran,
                                              differing.empty() ? "none" : differing.c_str())};
    });

    std::printf("%d of 11 criteria failed\n", run.failures);
    return run.failures == 0 ? 0 : 1;
}
