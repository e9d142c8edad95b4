// Copyright 2026 The qbrain Authors
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

#include "qbrain/qasm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qbrain/errors.hpp"

namespace qbrain {

std::string export_qasm(const Circuit& circuit, std::span<const Qubit> measured) {
    for (std::size_t i = 0; i < measured.size(); ++i) {
        const Qubit q = measured[i];
        if (q < 0 || q >= circuit.n_qubits()) {
            throw std::invalid_argument("measured qubit q" + std::to_string(q) + " out of range");
        }
        if (std::find(measured.begin(), measured.begin() + static_cast<std::ptrdiff_t>(i), q) !=
            measured.begin() + static_cast<std::ptrdiff_t>(i)) {
            throw std::invalid_argument("qubit q" + std::to_string(q) + " measured twice");
        }
    }

    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << circuit.n_qubits() << "];\n";
    os << "creg c[" << measured.size() << "];\n";
    for (const auto& op : circuit.ops()) {
        if (!is_basis_kind(op.kind) || !op.all_controls_positive()) {
            throw UnsupportedGateError("cannot emit " + to_string(op) + "; lower the circuit first");
        }
        os << gate_name(op.kind) << ' ';
        bool first = true;
        for (Qubit q : op.qubits()) {
            if (!first) os << ',';
            os << "q[" << q << ']';
            first = false;
        }
        os << ";\n";
    }
    for (std::size_t i = 0; i < measured.size(); ++i) {
        os << "measure q[" << measured[i] << "] -> c[" << i << "];\n";
    }
    return os.str();
}

}  // namespace qbrain
