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

// The five-qubit controller of a light-fearing vehicle with two wheel motors
// and a flight motor.
//
// Register layout:
//   q0, q1  ancillas (copies of the sensor bits, never uncomputed)
//   q2, q3  sensor inputs S1, S2; read back as wheel motors M1, M2
//   q4      flight motor M3
//
//   S1 S2 | M1 M2 M3 | behavior
//    0  0 |  1  1  0 | Moves forward
//    0  1 |  0  1  0 | Takes a left turn
//    1  0 |  1  0  0 | Takes a right turn
//    1  1 |  0  0  1 | Takes off from the ground

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qbrain/circuit.hpp"
#include "qbrain/qsim.hpp"

namespace qbrain {

struct SensorInput {
    bool s1 = false;
    bool s2 = false;

    friend bool operator==(const SensorInput&, const SensorInput&) = default;
};

struct MotorOutput {
    bool m1 = false;
    bool m2 = false;
    bool m3 = false;

    friend bool operator==(const MotorOutput&, const MotorOutput&) = default;
};

/// All four sensor inputs in row order 00, 01, 10, 11.
inline constexpr std::array<SensorInput, 4> kAllSensorInputs{
    SensorInput{false, false}, SensorInput{false, true}, SensorInput{true, false},
    SensorInput{true, true}};

struct RobotLayout {
    static constexpr int kQubits = 5;
    static constexpr std::array<Qubit, 2> kAncillas{0, 1};
    static constexpr Qubit kSensor1 = 2;
    static constexpr Qubit kSensor2 = 3;
    static constexpr Qubit kFlightMotor = 4;
    /// Read out in this order as (m1, m2, m3).
    static constexpr std::array<Qubit, 3> kMeasured{2, 3, 4};
};

enum class BrainKind { Quantum, QuantumLowered, Classical };

std::string_view brain_name(BrainKind kind);

/// Accepts "quantum", "quantum-lowered" (or "quantum_lowered") and "classical".
std::optional<BrainKind> parse_brain(std::string_view name);

/// cx q2->q0; cx q3->q1; ccxx(q0,q1 -> q2,q3); ccxx(!q0,!q1 -> q2,q3); ccx(!q2,!q3 -> q4)
Circuit build_robot_circuit();

/// lower(build_robot_circuit()), built once.
const Circuit& lowered_robot_circuit();

/// |0 0 s1 s2 0>.
StateVector robot_input_state(SensorInput input);

/// Marginal over (q2, q3, q4) after running the (optionally lowered) circuit.
OutcomeDistribution robot_outcomes(SensorInput input, bool lowered);

/// Runs the circuit and reads the motors. Throws InternalConsistencyError if
/// the readout is not a delta distribution within kTolerance.
MotorOutput drive(SensorInput input, bool lowered);

/// Table lookup, no simulation.
MotorOutput classical_drive(SensorInput input);

/// Dispatches to drive() or classical_drive().
MotorOutput drive_with(BrainKind kind, SensorInput input);

/// "Moves forward", "Takes a left turn", "Takes a right turn" or
/// "Takes off from the ground"; throws std::invalid_argument for a motor
/// triple outside the table.
std::string_view behavior_label(MotorOutput out);

/// "110" style rendering, m1 first.
std::string to_bits(MotorOutput out);
std::string to_bits(SensorInput in);

}  // namespace qbrain
