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

#include "qbrain/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qbrain {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::CX: return "cx";
        case GateKind::CCX: return "ccx";
        case GateKind::CCXX: return "ccxx";
    }
    return "?";
}

std::size_t control_count(GateKind kind) {
    switch (kind) {
        case GateKind::CX: return 1;
        case GateKind::CCX:
        case GateKind::CCXX: return 2;
        default: return 0;
    }
}

std::size_t target_count(GateKind kind) {
    return kind == GateKind::CCXX ? 2 : 1;
}

bool is_basis_kind(GateKind kind) {
    return kind != GateKind::CCX && kind != GateKind::CCXX;
}

void CircuitOp::validate() const {
    if (controls.size() != control_count(kind) || targets.size() != target_count(kind)) {
        throw std::invalid_argument("wrong control/target count for " +
                                    std::string(gate_name(kind)));
    }
    auto qs = qubits();
    for (Qubit q : qs) {
        if (q < 0) {
            throw std::invalid_argument("negative qubit index in " + to_string(*this));
        }
    }
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw std::invalid_argument("repeated qubit in " + to_string(*this));
    }
}

bool CircuitOp::all_controls_positive() const {
    return std::all_of(controls.begin(), controls.end(),
                       [](const Control& c) { return c.polarity == Polarity::Positive; });
}

std::vector<Qubit> CircuitOp::qubits() const {
    std::vector<Qubit> out;
    out.reserve(controls.size() + targets.size());
    for (const auto& c : controls) out.push_back(c.qubit);
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
}

bool CircuitOp::touches(Qubit q) const {
    auto qs = qubits();
    return std::find(qs.begin(), qs.end(), q) != qs.end();
}

CircuitOp single(GateKind kind, Qubit target) {
    CircuitOp op{kind, {}, {target}};
    op.validate();
    return op;
}

CircuitOp cx(Control control, Qubit target) {
    CircuitOp op{GateKind::CX, {control}, {target}};
    op.validate();
    return op;
}

CircuitOp cx(Qubit control, Qubit target) { return cx(pos(control), target); }

CircuitOp ccx(Control a, Control b, Qubit target) {
    CircuitOp op{GateKind::CCX, {a, b}, {target}};
    op.validate();
    return op;
}

CircuitOp ccxx(Control a, Control b, Qubit t1, Qubit t2) {
    CircuitOp op{GateKind::CCXX, {a, b}, {t1, t2}};
    op.validate();
    return op;
}

std::string to_string(const CircuitOp& op) {
    std::ostringstream os;
    os << gate_name(op.kind) << ' ';
    for (std::size_t i = 0; i < op.controls.size(); ++i) {
        if (i) os << ',';
        if (op.controls[i].polarity == Polarity::Negative) os << '!';
        os << 'q' << op.controls[i].qubit;
    }
    if (!op.controls.empty()) os << " -> ";
    for (std::size_t i = 0; i < op.targets.size(); ++i) {
        if (i) os << ',';
        os << 'q' << op.targets[i];
    }
    return os.str();
}

Circuit::Circuit(int n_qubits, std::string name) : n_qubits_(n_qubits), name_(std::move(name)) {
    if (n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit& Circuit::add(CircuitOp op) {
    op.validate();
    for (Qubit q : op.qubits()) {
        if (q >= n_qubits_) {
            throw std::invalid_argument("qubit q" + std::to_string(q) + " out of range for " +
                                        std::to_string(n_qubits_) + "-qubit circuit");
        }
    }
    ops_.push_back(std::move(op));
    return *this;
}

bool Circuit::is_lowered() const {
    return std::all_of(ops_.begin(), ops_.end(), [](const CircuitOp& op) {
        return is_basis_kind(op.kind) && op.all_controls_positive();
    });
}

}  // namespace qbrain
