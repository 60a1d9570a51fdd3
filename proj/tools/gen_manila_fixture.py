#!/usr/bin/env python3
# Copyright 2026 The pqcopt Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates backends/manila.json.

A fictional 5-qubit line device with calibration numbers in the range
typical of small superconducting machines. RZ is a virtual frame change
and carries zero error. Deterministic: same seed, same file.
"""
import json
import random
import sys

SEED = 20240501
N = 5


def main(path):
    rng = random.Random(SEED)
    coupling = []
    for a in range(N - 1):
        coupling += [[a, a + 1], [a + 1, a]]
    errors = []
    for q in range(N):
        one_q = round(rng.uniform(2e-4, 5e-4), 6)
        for gate in ("id", "sx", "x"):
            errors.append({"gate": gate, "qubits": [q], "error": one_q})
        errors.append({"gate": "rz", "qubits": [q], "error": 0.0})
    for a in range(N - 1):
        cx = round(rng.uniform(6e-3, 1.2e-2), 6)
        errors.append({"gate": "cx", "qubits": [a, a + 1], "error": cx})
        errors.append({"gate": "cx", "qubits": [a + 1, a], "error": cx})
    readout = [round(rng.uniform(2e-2, 4e-2), 5) for _ in range(N)]
    doc = {
        "format": 1,
        "name": "manila",
        "n_qubits": N,
        "coupling_map": coupling,
        "basis_gates": ["id", "rz", "sx", "x", "cx", "reset"],
        "gate_errors": errors,
        "readout_errors": readout,
    }
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "backends/manila.json")
