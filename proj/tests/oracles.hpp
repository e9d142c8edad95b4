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

// Test-only reference implementations. Nothing here goes through the
// simulator's gate application or op_matrix; permutations are built straight
// from bit arithmetic so they can check those code paths.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qbrain/circuit.hpp"
#include "qbrain/qsim.hpp"

namespace qbrain::testing {

/// Value of qubit q in basis index i of an n-qubit register (q0 = MSB).
inline bool bit_of(std::uint64_t i, int q, int n) { return (i >> (n - 1 - q)) & 1u; }

inline std::uint64_t flip(std::uint64_t i, int q, int n) { return i ^ (std::uint64_t{1} << (n - 1 - q)); }

/// Column j holds |f(j)>.
inline GateMatrix permutation_matrix(int n, const std::function<std::uint64_t(std::uint64_t)>& f) {
    const std::size_t d = std::size_t{1} << n;
    std::vector<Amplitude> e(d * d);
    for (std::uint64_t col = 0; col < d; ++col) e[f(col) * d + col] = 1.0;
    return GateMatrix(n, std::move(e));
}

/// Toffoli on (a, b -> c) inside an n-qubit register.
inline GateMatrix toffoli_oracle(int n, int a, int b, int c) {
    return permutation_matrix(n, [=](std::uint64_t i) {
        return (bit_of(i, a, n) && bit_of(i, b, n)) ? flip(i, c, n) : i;
    });
}

/// Two-control two-target flip on (a, b -> t1, t2).
inline GateMatrix double_target_oracle(int n, int a, int b, int t1, int t2) {
    return permutation_matrix(n, [=](std::uint64_t i) {
        return (bit_of(i, a, n) && bit_of(i, b, n)) ? flip(flip(i, t1, n), t2, n) : i;
    });
}

/// The robot circuit as plain bit logic on a 5-bit word.
inline std::uint64_t robot_bit_logic(std::uint64_t i) {
    constexpr int n = 5;
    if (bit_of(i, 2, n)) i = flip(i, 0, n);
    if (bit_of(i, 3, n)) i = flip(i, 1, n);
    if (bit_of(i, 0, n) && bit_of(i, 1, n)) i = flip(flip(i, 2, n), 3, n);
    if (!bit_of(i, 0, n) && !bit_of(i, 1, n)) i = flip(flip(i, 2, n), 3, n);
    if (!bit_of(i, 2, n) && !bit_of(i, 3, n)) i = flip(i, 4, n);
    return i;
}

/// Random circuit over every IR kind with random control polarities.
inline Circuit random_circuit(std::mt19937_64& rng, int max_qubits, int max_ops) {
    std::uniform_int_distribution<int> nq(1, max_qubits);
    std::uniform_int_distribution<int> nops(0, max_ops);
    const int n = nq(rng);
    Circuit c(n, "random");
    std::vector<GateKind> kinds{GateKind::X, GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T,
                                GateKind::Tdg};
    if (n >= 2) kinds.push_back(GateKind::CX);
    if (n >= 3) kinds.push_back(GateKind::CCX);
    if (n >= 4) kinds.push_back(GateKind::CCXX);
    std::uniform_int_distribution<std::size_t> pick_kind(0, kinds.size() - 1);
    std::bernoulli_distribution negative(0.5);

    const int count = nops(rng);
    for (int k = 0; k < count; ++k) {
        const GateKind kind = kinds[pick_kind(rng)];
        std::vector<Qubit> qs(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) qs[q] = q;
        std::shuffle(qs.begin(), qs.end(), rng);
        CircuitOp op{kind, {}, {}};
        std::size_t next = 0;
        for (std::size_t i = 0; i < control_count(kind); ++i) {
            op.controls.push_back({qs[next++], negative(rng) ? Polarity::Negative : Polarity::Positive});
        }
        for (std::size_t i = 0; i < target_count(kind); ++i) op.targets.push_back(qs[next++]);
        c.add(op);
    }
    return c;
}

}  // namespace qbrain::testing
