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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qbrain {

/// Qubit index. Qubit 0 is the leftmost character of a ket string and the
/// most significant bit of a basis index (see qsim.hpp).
using Qubit = int;

enum class GateKind { X, H, S, Sdg, T, Tdg, CX, CCX, CCXX };

/// Lower-case mnemonic ("x", "ccxx", ...). Matches qelib1 names where one exists.
std::string_view gate_name(GateKind kind);

/// Number of controls the kind carries.
std::size_t control_count(GateKind kind);

/// Number of targets the kind carries.
std::size_t target_count(GateKind kind);

/// True for the kinds the lowered basis {x, h, s, sdg, t, tdg, cx} contains.
bool is_basis_kind(GateKind kind);

enum class Polarity {
    Positive,  ///< fires on |1>
    Negative,  ///< fires on |0> (anticontrol)
};

struct Control {
    Qubit qubit = 0;
    Polarity polarity = Polarity::Positive;

    friend bool operator==(const Control&, const Control&) = default;
};

inline Control pos(Qubit q) { return {q, Polarity::Positive}; }
inline Control neg(Qubit q) { return {q, Polarity::Negative}; }

struct CircuitOp {
    GateKind kind = GateKind::X;
    std::vector<Control> controls;
    std::vector<Qubit> targets;

    /// Throws std::invalid_argument when control/target counts do not match
    /// the kind, or when a qubit appears twice.
    void validate() const;

    bool all_controls_positive() const;

    /// Controls followed by targets.
    std::vector<Qubit> qubits() const;

    bool touches(Qubit q) const;

    friend bool operator==(const CircuitOp&, const CircuitOp&) = default;
};

// Op constructors. All of them validate.
CircuitOp single(GateKind kind, Qubit target);
CircuitOp cx(Control control, Qubit target);
CircuitOp cx(Qubit control, Qubit target);
CircuitOp ccx(Control a, Control b, Qubit target);
CircuitOp ccxx(Control a, Control b, Qubit t1, Qubit t2);

/// Human-readable form, e.g. "ccx !q2,!q3 -> q4". Used in test diagnostics.
std::string to_string(const CircuitOp& op);

class Circuit {
public:
    explicit Circuit(int n_qubits, std::string name = {});

    int n_qubits() const { return n_qubits_; }
    const std::string& name() const { return name_; }
    const std::vector<CircuitOp>& ops() const { return ops_; }
    bool empty() const { return ops_.empty(); }
    std::size_t size() const { return ops_.size(); }

    /// Appends after validating the op and its qubit range.
    Circuit& add(CircuitOp op);

    Circuit& x(Qubit q) { return add(single(GateKind::X, q)); }
    Circuit& h(Qubit q) { return add(single(GateKind::H, q)); }
    Circuit& s(Qubit q) { return add(single(GateKind::S, q)); }
    Circuit& sdg(Qubit q) { return add(single(GateKind::Sdg, q)); }
    Circuit& t(Qubit q) { return add(single(GateKind::T, q)); }
    Circuit& tdg(Qubit q) { return add(single(GateKind::Tdg, q)); }

    /// True when every op is in the lowered basis with positive controls.
    bool is_lowered() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    int n_qubits_;
    std::string name_;
    std::vector<CircuitOp> ops_;
};

}  // namespace qbrain
