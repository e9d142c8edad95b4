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

#include "qbrain/synthesis.hpp"

#include <stdexcept>

#include "qbrain/errors.hpp"

namespace qbrain {
namespace {

template <typename Pass>
Circuit map_ops(const Circuit& c, Pass pass) {
    Circuit out(c.n_qubits(), c.name());
    for (const auto& op : c.ops()) {
        for (auto& lowered : pass(op)) out.add(std::move(lowered));
    }
    return out;
}

Circuit from_ops(const Circuit& like, std::vector<CircuitOp> ops) {
    Circuit out(like.n_qubits(), like.name());
    for (auto& op : ops) out.add(std::move(op));
    return out;
}

void check_known(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::CCXX: return;
    }
    throw UnsupportedGateError("unknown gate kind");
}

}  // namespace

std::vector<CircuitOp> split_double_target(const CircuitOp& op) {
    if (op.kind != GateKind::CCXX) {
        throw std::invalid_argument("split_double_target expects ccxx, got " + to_string(op));
    }
    op.validate();
    return {ccx(op.controls[0], op.controls[1], op.targets[0]),
            ccx(op.controls[0], op.controls[1], op.targets[1])};
}

std::vector<CircuitOp> remove_anticontrols(const CircuitOp& op) {
    op.validate();
    if (op.all_controls_positive()) return {op};

    std::vector<CircuitOp> flips;
    CircuitOp positive = op;
    for (auto& c : positive.controls) {
        if (c.polarity == Polarity::Negative) {
            flips.push_back(single(GateKind::X, c.qubit));
            c.polarity = Polarity::Positive;
        }
    }
    std::vector<CircuitOp> out = flips;
    out.push_back(std::move(positive));
    out.insert(out.end(), flips.begin(), flips.end());
    return out;
}

std::vector<CircuitOp> decompose_toffoli(const CircuitOp& op) {
    if (op.kind != GateKind::CCX) {
        throw std::invalid_argument("decompose_toffoli expects ccx, got " + to_string(op));
    }
    op.validate();
    if (!op.all_controls_positive()) {
        throw std::invalid_argument("decompose_toffoli needs positive controls; run "
                                    "remove_anticontrols first: " + to_string(op));
    }
    const Qubit a = op.controls[0].qubit;
    const Qubit b = op.controls[1].qubit;
    const Qubit c = op.targets[0];
    return {
        single(GateKind::H, c),   cx(b, c), single(GateKind::Tdg, c), cx(a, c),
        single(GateKind::T, c),   cx(b, c), single(GateKind::Tdg, c), cx(a, c),
        single(GateKind::T, b),   single(GateKind::T, c),             single(GateKind::H, c),
        cx(a, b),                 single(GateKind::T, a),             single(GateKind::Tdg, b),
        cx(a, b),
    };
}

std::vector<CircuitOp> cancel_x_pairs(std::vector<CircuitOp> ops) {
    auto is_x = [](const CircuitOp& op) { return op.kind == GateKind::X; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ops.size() && !changed; ++i) {
            if (!is_x(ops[i])) continue;
            const Qubit q = ops[i].targets[0];
            for (std::size_t j = i + 1; j < ops.size(); ++j) {
                if (!ops[j].touches(q)) continue;
                if (is_x(ops[j])) {
                    ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(j));
                    ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                }
                break;
            }
        }
    }
    return ops;
}

Circuit split_double_targets(const Circuit& c) {
    return map_ops(c, [](const CircuitOp& op) {
        check_known(op.kind);
        return op.kind == GateKind::CCXX ? split_double_target(op) : std::vector<CircuitOp>{op};
    });
}

Circuit remove_anticontrols(const Circuit& c) {
    return map_ops(c, [](const CircuitOp& op) { return remove_anticontrols(op); });
}

Circuit cancel_x_pairs(const Circuit& c) {
    return from_ops(c, cancel_x_pairs(c.ops()));
}

Circuit decompose_toffolis(const Circuit& c) {
    return map_ops(c, [](const CircuitOp& op) {
        return op.kind == GateKind::CCX ? decompose_toffoli(op) : std::vector<CircuitOp>{op};
    });
}

Circuit lower(const Circuit& c) {
    Circuit out = split_double_targets(c);
    out = remove_anticontrols(out);
    out = cancel_x_pairs(out);
    return decompose_toffolis(out);
}

}  // namespace qbrain
