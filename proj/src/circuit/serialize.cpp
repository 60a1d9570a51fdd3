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

#include "pqcopt/circuit/serialize.hpp"

#include <stdexcept>

namespace pqcopt {

using nlohmann::json;

json circuit_to_json(const Circuit &circuit) {
    json gates = json::array();
    for (const Gate &g : circuit.gates()) {
        json jg;
        jg["kind"] = std::string(to_string(g.kind));
        jg["qubits"] = g.arity() == 2 ? json::array({g.qubits[0], g.qubits[1]})
                                      : json::array({g.qubits[0]});
        if (g.angle) {
            if (g.angle->is_constant()) {
                jg["angle"] = g.angle->offset;
            } else {
                jg["slot"] = g.angle->slot;
                if (g.angle->coeff != 1.0 || g.angle->offset != 0.0) {
                    jg["coeff"] = g.angle->coeff;
                    jg["offset"] = g.angle->offset;
                }
            }
        }
        gates.push_back(std::move(jg));
    }
    return json{{"format", 1},
                {"n_qubits", circuit.n_qubits()},
                {"n_params", circuit.n_params()},
                {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json &doc) {
    if (doc.value("format", 0) != 1) {
        throw std::invalid_argument("unsupported circuit format");
    }
    Circuit c(doc.at("n_qubits").get<int>());
    for (const json &jg : doc.at("gates")) {
        const auto name = jg.at("kind").get<std::string>();
        auto kind = parse_gate_kind(name);
        if (!kind) {
            throw std::invalid_argument("unknown gate kind '" + name + "'");
        }
        Gate g;
        g.kind = *kind;
        const auto &qs = jg.at("qubits");
        g.qubits[0] = qs.at(0).get<int>();
        if (qs.size() > 1) {
            g.qubits[1] = qs.at(1).get<int>();
        }
        if (jg.contains("slot")) {
            g.angle = Angle::param(jg.at("slot").get<int>(), jg.value("coeff", 1.0),
                                   jg.value("offset", 0.0));
        } else if (jg.contains("angle")) {
            g.angle = Angle::constant(jg.at("angle").get<double>());
        }
        c.append(g);
    }
    c.reserve_params(doc.value("n_params", 0));
    return c;
}

json genome_to_json(const AnsatzGenome &genome) {
    const DesignParams &d = genome.design();
    json mask = json::array();
    json grid = json::array();
    for (int i = 0; i < d.n_qubits; ++i) {
        json row = json::array();
        json cells = json::array();
        for (int j = 0; j < d.n_qubits; ++j) {
            row.push_back(genome.entangled(i, j) ? 1 : 0);
        }
        for (int k = 0; k < d.n_gates; ++k) {
            cells.push_back(to_string(genome.choice(i, k)));
        }
        mask.push_back(std::move(row));
        grid.push_back(std::move(cells));
    }
    return json{{"n_qubits", d.n_qubits},
                {"n_gates", d.n_gates},
                {"entanglement", std::move(mask)},
                {"grid", std::move(grid)}};
}

} // namespace pqcopt
