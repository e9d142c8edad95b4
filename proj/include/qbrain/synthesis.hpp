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

// Gate lowering from the high-level IR down to {x, h, s, sdg, t, tdg, cx}.
//
// lower() runs the passes in a fixed order:
//   1. split_double_target:  ccxx            -> two ccx sharing the controls
//   2. remove_anticontrols:  negative control -> x . op . x on that wire
//   3. cancel_x_pairs:       x q ... x q with nothing touching q between -> removed
//   4. decompose_toffoli:    ccx             -> 15-gate Clifford+T network
// Every pass preserves the circuit unitary exactly.

#pragma once

#include <vector>

#include "qbrain/circuit.hpp"

namespace qbrain {

/// ccxx(a, b -> t1, t2) becomes [ccx(a, b -> t1), ccx(a, b -> t2)], polarities kept.
std::vector<CircuitOp> split_double_target(const CircuitOp& op);

/// Wraps `op` in x gates on each negative control and makes those controls positive.
/// An all-positive op comes back unchanged as a one-element list.
std::vector<CircuitOp> remove_anticontrols(const CircuitOp& op);

/// The canonical Clifford+T Toffoli network for ccx(a, b -> c), equal to the
/// Toffoli matrix with no global phase:
///   h c; cx b,c; tdg c; cx a,c; t c; cx b,c; tdg c; cx a,c;
///   t b; t c; h c; cx a,b; t a; tdg b; cx a,b
/// Throws std::invalid_argument unless op is a ccx with two positive controls.
std::vector<CircuitOp> decompose_toffoli(const CircuitOp& op);

/// Removes pairs of x gates on the same qubit that have no op touching that
/// qubit between them. Repeats until nothing cancels.
std::vector<CircuitOp> cancel_x_pairs(std::vector<CircuitOp> ops);

// Circuit-level wrappers, one per pass.
Circuit split_double_targets(const Circuit& c);
Circuit remove_anticontrols(const Circuit& c);
Circuit cancel_x_pairs(const Circuit& c);
Circuit decompose_toffolis(const Circuit& c);

/// Full lowering pipeline. The result satisfies Circuit::is_lowered() and
/// lower(lower(c)) == lower(c).
Circuit lower(const Circuit& c);

}  // namespace qbrain
