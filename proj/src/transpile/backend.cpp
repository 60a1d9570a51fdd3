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

#include "pqcopt/transpile/backend.hpp"

#include <fstream>
#include <stdexcept>

namespace pqcopt {

using nlohmann::json;

namespace {

const std::set<GateKind> kAllowedBasis{GateKind::ID, GateKind::RZ, GateKind::SX,
                                       GateKind::X,  GateKind::CX, GateKind::RESET};

void check_rate(double p, const std::string &what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(what + " outside [0, 1]");
    }
}

} // namespace

std::optional<double> BackendSnapshot::gate_error(const Gate &gate) const {
    auto it = gate_errors.find(GateKey::of(gate));
    if (it != gate_errors.end()) {
        return it->second;
    }
    if (gate.kind == GateKind::ID || gate.kind == GateKind::RESET) {
        return 0.0;
    }
    return std::nullopt;
}

void BackendSnapshot::validate() const {
    if (n_qubits < 1) {
        throw std::invalid_argument("backend needs at least one qubit");
    }
    for (auto [a, b] : coupling_map) {
        if (a == b || a < 0 || b < 0 || a >= n_qubits || b >= n_qubits) {
            throw std::invalid_argument("invalid coupling pair (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        }
    }
    for (GateKind k : basis_gates) {
        if (!kAllowedBasis.contains(k)) {
            throw std::invalid_argument("unsupported basis gate " + std::string(to_string(k)));
        }
    }
    for (const auto &[key, p] : gate_errors) {
        check_rate(p, "gate error");
        if (!basis_gates.contains(key.kind)) {
            throw std::invalid_argument("error rate for non-basis gate " +
                                        std::string(to_string(key.kind)));
        }
        Gate probe{key.kind, key.qubits, is_rotation(key.kind) ? std::optional<Angle>(Angle{})
                                                                : std::nullopt};
        validate_gate(probe, n_qubits);
        if (key.kind == GateKind::CX && !coupled(key.qubits[0], key.qubits[1])) {
            throw std::invalid_argument("CX error keyed on uncoupled pair (" +
                                        std::to_string(key.qubits[0]) + "," +
                                        std::to_string(key.qubits[1]) + ")");
        }
    }
    if (readout_errors.size() != static_cast<std::size_t>(n_qubits)) {
        throw std::invalid_argument("readout_errors must have one entry per qubit");
    }
    for (double r : readout_errors) {
        check_rate(r, "readout error");
    }
}

BackendSnapshot load_backend_snapshot(const json &doc) {
    try {
        if (doc.at("format").get<int>() != 1) {
            throw std::invalid_argument("unsupported backend format");
        }
        BackendSnapshot s;
        s.name = doc.at("name").get<std::string>();
        s.n_qubits = doc.at("n_qubits").get<int>();
        for (const json &pair : doc.at("coupling_map")) {
            if (pair.size() != 2) {
                throw std::invalid_argument("coupling entries must be pairs");
            }
            s.coupling_map.emplace(pair.at(0).get<int>(), pair.at(1).get<int>());
        }
        for (const json &g : doc.at("basis_gates")) {
            auto kind = parse_gate_kind(g.get<std::string>());
            if (!kind) {
                throw std::invalid_argument("unknown basis gate " + g.get<std::string>());
            }
            s.basis_gates.insert(*kind);
        }
        for (const json &e : doc.at("gate_errors")) {
            const auto name = e.at("gate").get<std::string>();
            auto kind = parse_gate_kind(name);
            if (!kind) {
                throw std::invalid_argument("unknown gate in gate_errors: " + name);
            }
            const auto &qs = e.at("qubits");
            const std::size_t arity = is_two_qubit(*kind) ? 2 : 1;
            if (qs.size() != arity) {
                throw std::invalid_argument("wrong operand count for " + name + " error");
            }
            GateKey key{*kind, {qs.at(0).get<int>(), arity == 2 ? qs.at(1).get<int>() : -1}};
            if (!s.gate_errors.emplace(key, e.at("error").get<double>()).second) {
                throw std::invalid_argument("duplicate error entry for " + name);
            }
        }
        s.readout_errors = doc.at("readout_errors").get<std::vector<double>>();
        s.validate();
        return s;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed backend snapshot: ") + e.what());
    }
}

BackendSnapshot load_backend_snapshot(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open backend snapshot " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception &e) {
        throw std::invalid_argument("malformed backend snapshot " + path.string() + ": " +
                                    e.what());
    }
    return load_backend_snapshot(doc);
}

json backend_to_json(const BackendSnapshot &s) {
    json coupling = json::array();
    for (auto [a, b] : s.coupling_map) {
        coupling.push_back({a, b});
    }
    json basis = json::array();
    for (GateKind k : s.basis_gates) {
        basis.push_back(std::string(to_string(k)));
    }
    json errors = json::array();
    for (const auto &[key, p] : s.gate_errors) {
        json qs = is_two_qubit(key.kind) ? json::array({key.qubits[0], key.qubits[1]})
                                         : json::array({key.qubits[0]});
        errors.push_back({{"gate", std::string(to_string(key.kind))}, {"qubits", qs}, {"error", p}});
    }
    return json{{"format", 1},
                {"name", s.name},
                {"n_qubits", s.n_qubits},
                {"coupling_map", coupling},
                {"basis_gates", basis},
                {"gate_errors", errors},
                {"readout_errors", s.readout_errors}};
}

std::filesystem::path bundled_backend_path(std::string_view name) {
    return std::filesystem::path(PQCOPT_SOURCE_ROOT) / "backends" / (std::string(name) + ".json");
}

NoiseModel noise_model(const BackendSnapshot &s) {
    NoiseModel m(s.n_qubits);
    for (const auto &[key, p] : s.gate_errors) {
        m.set_gate_error(key.kind, key.qubits, p);
    }
    for (int q = 0; q < s.n_qubits; ++q) {
        m.set_readout_error(q, s.readout_errors[static_cast<std::size_t>(q)]);
    }
    return m;
}

} // namespace pqcopt
