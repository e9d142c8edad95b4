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

#include "qbrain/brain.hpp"

#include <stdexcept>

#include "qbrain/errors.hpp"
#include "qbrain/synthesis.hpp"

namespace qbrain {

std::string_view brain_name(BrainKind kind) {
    switch (kind) {
        case BrainKind::Quantum: return "quantum";
        case BrainKind::QuantumLowered: return "quantum-lowered";
        case BrainKind::Classical: return "classical";
    }
    return "?";
}

std::optional<BrainKind> parse_brain(std::string_view name) {
    if (name == "quantum") return BrainKind::Quantum;
    if (name == "quantum-lowered" || name == "quantum_lowered") return BrainKind::QuantumLowered;
    if (name == "classical") return BrainKind::Classical;
    return std::nullopt;
}

Circuit build_robot_circuit() {
    Circuit c(RobotLayout::kQubits, "quantum_robot");
    c.add(cx(2, 0));
    c.add(cx(3, 1));
    c.add(ccxx(pos(0), pos(1), 2, 3));
    c.add(ccxx(neg(0), neg(1), 2, 3));
    c.add(ccx(neg(2), neg(3), 4));
    return c;
}

const Circuit& lowered_robot_circuit() {
    static const Circuit lowered = lower(build_robot_circuit());
    return lowered;
}

StateVector robot_input_state(SensorInput input) {
    std::string ket = "00000";
    ket[RobotLayout::kSensor1] = input.s1 ? '1' : '0';
    ket[RobotLayout::kSensor2] = input.s2 ? '1' : '0';
    return StateVector::basis(RobotLayout::kQubits, ket);
}

OutcomeDistribution robot_outcomes(SensorInput input, bool lowered) {
    static const Circuit high_level = build_robot_circuit();
    const Circuit& circuit = lowered ? lowered_robot_circuit() : high_level;
    const auto out = run_circuit(circuit, robot_input_state(input));
    return outcome_distribution(out, RobotLayout::kMeasured);
}

MotorOutput drive(SensorInput input, bool lowered) {
    const auto dist = robot_outcomes(input, lowered);
    if (!dist.is_delta()) {
        throw InternalConsistencyError("robot circuit readout for input " + to_bits(input) +
                                       " is not deterministic");
    }
    const std::string bits = dist.bitstring(dist.most_likely());
    return {bits[0] == '1', bits[1] == '1', bits[2] == '1'};
}

MotorOutput classical_drive(SensorInput input) {
    if (!input.s1 && !input.s2) return {true, true, false};
    if (!input.s1 && input.s2) return {false, true, false};
    if (input.s1 && !input.s2) return {true, false, false};
    return {false, false, true};
}

MotorOutput drive_with(BrainKind kind, SensorInput input) {
    switch (kind) {
        case BrainKind::Quantum: return drive(input, false);
        case BrainKind::QuantumLowered: return drive(input, true);
        case BrainKind::Classical: return classical_drive(input);
    }
    throw std::invalid_argument("unknown brain kind");
}

std::string_view behavior_label(MotorOutput out) {
    if (out == MotorOutput{true, true, false}) return "Moves forward";
    if (out == MotorOutput{false, true, false}) return "Takes a left turn";
    if (out == MotorOutput{true, false, false}) return "Takes a right turn";
    if (out == MotorOutput{false, false, true}) return "Takes off from the ground";
    throw std::invalid_argument("motor output " + to_bits(out) + " is not a known behavior");
}

std::string to_bits(MotorOutput out) {
    return {out.m1 ? '1' : '0', out.m2 ? '1' : '0', out.m3 ? '1' : '0'};
}

std::string to_bits(SensorInput in) { return {in.s1 ? '1' : '0', in.s2 ? '1' : '0'}; }

}  // namespace qbrain
