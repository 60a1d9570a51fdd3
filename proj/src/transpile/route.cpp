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

#include <deque>
#include <numeric>
#include <stdexcept>

#include "pqcopt/transpile/transpile.hpp"

namespace pqcopt {

namespace {

// Shortest undirected path a -> b, endpoints included.
std::vector<int> shortest_path(const BackendSnapshot &backend, int a, int b) {
    const int n = backend.n_qubits;
    std::vector<int> prev(static_cast<std::size_t>(n), -2);
    std::deque<int> queue{a};
    prev[static_cast<std::size_t>(a)] = -1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == b) {
            break;
        }
        for (int v = 0; v < n; ++v) {
            if (prev[static_cast<std::size_t>(v)] == -2 && backend.adjacent(u, v)) {
                prev[static_cast<std::size_t>(v)] = u;
                queue.push_back(v);
            }
        }
    }
    if (prev[static_cast<std::size_t>(b)] == -2) {
        throw std::invalid_argument("backend " + backend.name + ": qubits " + std::to_string(a) +
                                    " and " + std::to_string(b) + " are not connected");
    }
    std::vector<int> path;
    for (int v = b; v != -1; v = prev[static_cast<std::size_t>(v)]) {
        path.insert(path.begin(), v);
    }
    return path;
}

class Router {
  public:
    Router(const BackendSnapshot &backend, int n_params, std::span<const int> layout)
        : backend_(backend), out_(backend.n_qubits) {
        out_.reserve_params(n_params);
        const auto n = static_cast<std::size_t>(backend.n_qubits);
        if (layout.empty()) {
            l2p_.resize(n);
            std::iota(l2p_.begin(), l2p_.end(), 0);
        } else {
            l2p_.assign(layout.begin(), layout.end());
        }
        p2l_.assign(n, -1);
        for (std::size_t v = 0; v < l2p_.size(); ++v) {
            const int p = l2p_[v];
            if (l2p_.size() != n || p < 0 || p >= backend.n_qubits ||
                p2l_[static_cast<std::size_t>(p)] != -1) {
                throw std::invalid_argument("initial layout is not a permutation of the backend qubits");
            }
            p2l_[static_cast<std::size_t>(p)] = static_cast<int>(v);
        }
    }

    void add(const Gate &g) {
        if (g.kind != GateKind::CX) {
            if (g.arity() == 2) {
                throw std::invalid_argument("route: unexpected two-qubit gate " + describe(g));
            }
            Gate m = g;
            m.qubits[0] = phys(g.qubits[0]);
            out_.append(m);
            return;
        }
        int pc = phys(g.qubits[0]);
        const int pt = phys(g.qubits[1]);
        if (!backend_.adjacent(pc, pt)) {
            auto path = shortest_path(backend_, pc, pt);
            for (std::size_t i = 0; i + 2 < path.size(); ++i) {
                swap(path[i], path[i + 1]);
            }
            pc = path[path.size() - 2];
        }
        cx(pc, pt);
    }

    TranspiledCircuit finish(int n_logical) {
        return TranspiledCircuit{std::move(out_), n_logical, l2p_};
    }

  private:
    int phys(int v) const { return l2p_[static_cast<std::size_t>(v)]; }

    void cx(int c, int t) {
        if (backend_.coupled(c, t)) {
            out_.append(Gate::two(GateKind::CX, c, t));
            return;
        }
        if (!backend_.coupled(t, c)) {
            throw std::logic_error("route: CX on uncoupled pair");
        }
        // H x H . CX(t, c) . H x H == CX(c, t)
        hadamards(c, t);
        out_.append(Gate::two(GateKind::CX, t, c));
        hadamards(c, t);
    }

    void hadamards(int a, int b) {
        for (int q : {a, b}) {
            for (const Gate &g : decompose_1q(Gate::one(GateKind::H, q))) {
                out_.append(g);
            }
        }
    }

    void swap(int a, int b) {
        cx(a, b);
        cx(b, a);
        cx(a, b);
        const int la = p2l_[static_cast<std::size_t>(a)];
        const int lb = p2l_[static_cast<std::size_t>(b)];
        std::swap(p2l_[static_cast<std::size_t>(a)], p2l_[static_cast<std::size_t>(b)]);
        l2p_[static_cast<std::size_t>(la)] = b;
        l2p_[static_cast<std::size_t>(lb)] = a;
    }

    const BackendSnapshot &backend_;
    Circuit out_;
    std::vector<int> l2p_;
    std::vector<int> p2l_;
};

} // namespace

TranspiledCircuit route(const Circuit &circuit, const BackendSnapshot &backend,
                        std::span<const int> initial_layout) {
    if (circuit.n_qubits() > backend.n_qubits) {
        throw std::invalid_argument("circuit needs " + std::to_string(circuit.n_qubits()) +
                                    " qubits; backend " + backend.name + " has " +
                                    std::to_string(backend.n_qubits));
    }
    Router router(backend, circuit.n_params(), initial_layout);
    for (const Gate &g : circuit.gates()) {
        router.add(g);
    }
    return router.finish(circuit.n_qubits());
}

} // namespace pqcopt
