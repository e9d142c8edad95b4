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

#include <span>
#include <string>

#include "qbrain/circuit.hpp"

namespace qbrain {

/// OpenQASM 2.0 text for a lowered circuit:
///
///   OPENQASM 2.0;
///   include "qelib1.inc";
///   qreg q[<n_qubits>];
///   creg c[<measured.size()>];
///   <one qelib1 statement per op>
///   measure q[<measured[i]>] -> c[i];   (in list order)
///
/// Lines end in '\n'. Throws UnsupportedGateError if a gate outside
/// {x, h, s, sdg, t, tdg, cx} or an anticontrol is present, and
/// std::invalid_argument for bad measured indices.
std::string export_qasm(const Circuit& circuit, std::span<const Qubit> measured);

}  // namespace qbrain
