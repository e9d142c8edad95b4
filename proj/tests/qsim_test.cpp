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

#include "qbrain/qsim.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qbrain/brain.hpp"
#include "qbrain/errors.hpp"

using namespace qbrain;
using qbrain::testing::random_circuit;

namespace {

constexpr double kEps = 1e-9;

GateMatrix x_gate() { return single_qubit_matrix(GateKind::X); }
GateMatrix h_gate() { return single_qubit_matrix(GateKind::H); }

std::vector<Qubit> qs(std::initializer_list<Qubit> l) { return l; }

}  // namespace

TEST(StateVector, basis_all_zeros_is_delta_at_zero) {
    auto s = StateVector::basis(5, "00000");
    ASSERT_EQ(s.size(), 32u);
    EXPECT_EQ(s[0], Amplitude(1.0));
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_EQ(s[i], Amplitude(0.0));
}

TEST(StateVector, basis_uses_q0_as_msb) {
    // q2 = q3 = 1 on five qubits -> 0b00110.
    auto s = StateVector::basis(5, "00110");
    EXPECT_EQ(s[6], Amplitude(1.0));
    EXPECT_EQ(s.basis_ket(), "00110");
    EXPECT_EQ(StateVector::basis(1, "1").amplitudes()[1], Amplitude(1.0));
    EXPECT_EQ(StateVector::basis(1, "1").amplitudes()[0], Amplitude(0.0));
}

TEST(StateVector, basis_rejects_bad_bits) {
    EXPECT_THROW(StateVector::basis(5, "0011"), std::invalid_argument);
    EXPECT_THROW(StateVector::basis(2, "0a"), std::invalid_argument);
    EXPECT_THROW(StateVector::basis(0, ""), std::invalid_argument);
}

TEST(StateVector, explicit_amplitudes_are_validated) {
    EXPECT_THROW(StateVector(1, {1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector(2, {1.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(StateVector(1, {std::nan(""), 0.0}), std::invalid_argument);
    EXPECT_NO_THROW(StateVector(1, {Amplitude(0.6), Amplitude(0.0, 0.8)}));
}

TEST(ApplyGate, hadamard_on_zero) {
    auto s = apply_gate(StateVector(1), h_gate(), qs({0}));
    EXPECT_NEAR(s[0].real(), 1.0 / std::sqrt(2.0), kEps);
    EXPECT_NEAR(s[1].real(), 1.0 / std::sqrt(2.0), kEps);
    EXPECT_NEAR(s.norm_squared(), 1.0, kEps);
}

TEST(ApplyGate, x_on_q3) {
    auto s = apply_gate(StateVector::basis(5, "00000"), x_gate(), qs({3}));
    EXPECT_EQ(s.basis_ket(), "00010");
}

TEST(ApplyGate, cnot_copies_q2_into_q0) {
    auto s = StateVector::basis(5, "00100");
    s.apply(cx(2, 0));
    EXPECT_EQ(s.basis_ket(), "10100");
}

TEST(ApplyGate, target_order_sets_local_msb) {
    // A CNOT matrix with control as local MSB; reversing the target list
    // makes q1 the control.
    const auto m = op_matrix(cx(0, 1));
    auto s = apply_gate(StateVector::basis(2, "01"), m, qs({1, 0}));
    EXPECT_EQ(s.basis_ket(), "11");
}

TEST(ApplyGate, rejects_bad_targets_and_gates) {
    StateVector s(3);
    const auto cnot = op_matrix(cx(0, 1));
    EXPECT_THROW(s.apply(cnot, qs({1, 1})), std::invalid_argument);
    EXPECT_THROW(s.apply(cnot, qs({0, 3})), std::invalid_argument);
    EXPECT_THROW(s.apply(cnot, qs({0})), std::invalid_argument);
    EXPECT_THROW(s.apply(x_gate(), qs({-1})), std::invalid_argument);
    const GateMatrix not_unitary(1, {1.0, 1.0, 0.0, 1.0});
    EXPECT_THROW(s.apply(not_unitary, qs({0})), std::invalid_argument);
}

TEST(OpMatrix, anticontrol_fires_on_zero) {
    auto s = StateVector::basis(2, "00");
    s.apply(cx(neg(0), 1));
    EXPECT_EQ(s.basis_ket(), "01");
    s = StateVector::basis(2, "10");
    s.apply(cx(neg(0), 1));
    EXPECT_EQ(s.basis_ket(), "10");
}

TEST(OpMatrix, every_kind_is_unitary) {
    for (auto k : {GateKind::X, GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg}) {
        EXPECT_TRUE(single_qubit_matrix(k).is_unitary()) << gate_name(k);
    }
    EXPECT_TRUE(op_matrix(ccxx(neg(0), pos(1), 2, 3)).is_unitary());
    EXPECT_THROW(single_qubit_matrix(GateKind::CX), UnsupportedGateError);
}

TEST(RunCircuit, empty_circuit_is_identity) {
    const StateVector in(3, {0.5, 0.0, 0.5, 0.0, Amplitude(0, 0.5), 0.0, 0.0, -0.5});
    const auto out = run_circuit(Circuit(3), in);
    for (std::size_t i = 0; i < in.size(); ++i) EXPECT_EQ(out[i], in[i]);
}

TEST(RunCircuit, robot_circuit_examples) {
    const auto robot = build_robot_circuit();
    EXPECT_EQ(run_circuit(robot, StateVector::basis(5, "00110")).basis_ket(), "11001");
    EXPECT_EQ(run_circuit(robot, StateVector::basis(5, "00010")).basis_ket(), "01010");
}

TEST(RunCircuit, qubit_count_mismatch_throws) {
    EXPECT_THROW(run_circuit(Circuit(2), StateVector(3)), std::invalid_argument);
}

TEST(OutcomeDistribution, marginal_over_last_three) {
    const std::vector<Qubit> m{2, 3, 4};
    auto d = outcome_distribution(StateVector::basis(5, "00110"), m);
    EXPECT_NEAR(d.probability("110"), 1.0, kEps);
    EXPECT_TRUE(d.is_delta());
    EXPECT_EQ(d.bitstring(d.most_likely()), "110");

    d = outcome_distribution(StateVector::basis(5, "11001"), m);
    EXPECT_NEAR(d.probability("001"), 1.0, kEps);
}

TEST(OutcomeDistribution, uniform_superposition) {
    const auto s = apply_gate(StateVector(1), h_gate(), qs({0}));
    const auto d = outcome_distribution(s, qs({0}));
    EXPECT_NEAR(d.probability("0"), 0.5, kEps);
    EXPECT_NEAR(d.probability("1"), 0.5, kEps);
    EXPECT_FALSE(d.is_delta());
}

TEST(OutcomeDistribution, order_follows_measured_list) {
    const auto s = StateVector::basis(3, "100");
    EXPECT_NEAR(outcome_distribution(s, qs({0, 2})).probability("10"), 1.0, kEps);
    EXPECT_NEAR(outcome_distribution(s, qs({2, 0})).probability("01"), 1.0, kEps);
}

TEST(OutcomeDistribution, rejects_bad_indices) {
    const StateVector s(3);
    EXPECT_THROW(outcome_distribution(s, qs({0, 0})), std::invalid_argument);
    EXPECT_THROW(outcome_distribution(s, qs({3})), std::invalid_argument);
}

TEST(CircuitUnitary, small_cases) {
    EXPECT_TRUE(equal_exactly(circuit_unitary(Circuit(1)), GateMatrix::identity(1), 0.0));
    Circuit c(1);
    c.x(0);
    EXPECT_TRUE(equal_exactly(circuit_unitary(c), GateMatrix(1, {0.0, 1.0, 1.0, 0.0}), 0.0));
}

TEST(CircuitUnitary, size_guard) {
    EXPECT_NO_THROW(circuit_unitary(Circuit(kMaxUnitaryQubits)));
    EXPECT_THROW(circuit_unitary(Circuit(kMaxUnitaryQubits + 1)), ResourceLimitError);
}

TEST(GlobalPhase, comparison_ignores_phase_only) {
    const auto h = h_gate();
    const Amplitude phase = std::polar(1.0, 0.7);
    std::vector<Amplitude> rotated(h.entries().begin(), h.entries().end());
    for (auto& a : rotated) a *= phase;
    const GateMatrix hp(1, rotated);
    EXPECT_TRUE(equal_up_to_global_phase(h, hp));
    EXPECT_FALSE(equal_exactly(h, hp, 1e-3));
    EXPECT_FALSE(equal_up_to_global_phase(h, x_gate()));
    // Relative phase is not global phase.
    EXPECT_FALSE(equal_up_to_global_phase(single_qubit_matrix(GateKind::S), GateMatrix::identity(1)));
}

// Properties.

TEST(Properties, norm_preserved_by_random_circuits) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = random_circuit(rng, 5, 12);
        auto s = StateVector(c.n_qubits());
        s = apply_gate(s, h_gate(), qs({0}));
        for (const auto& op : c.ops()) {
            s.apply(op);
            ASSERT_NEAR(s.norm_squared(), 1.0, kEps);
        }
    }
}

TEST(Properties, x_type_circuits_keep_basis_states) {
    std::mt19937_64 rng(11);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = random_circuit(rng, 5, 10);
        Circuit xs(c.n_qubits());
        for (const auto& op : c.ops()) {
            if (op.kind == GateKind::X || !op.controls.empty()) xs.add(op);
        }
        std::uniform_int_distribution<std::uint64_t> pick(0, (1u << c.n_qubits()) - 1);
        const auto out = run_circuit(xs, StateVector::basis_index(c.n_qubits(), pick(rng)));
        ASSERT_TRUE(out.basis_index_if_basis().has_value());
    }
}

TEST(Properties, linearity_on_three_qubits) {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 100; ++trial) {
        Circuit c(1);
        do {
            c = random_circuit(rng, 3, 8);
        } while (c.n_qubits() != 3);
        const std::uint64_t a = rng() % 8;
        std::uint64_t b = rng() % 8;
        if (b == a) b = (a + 1) % 8;
        Amplitude alpha(g(rng), g(rng)), beta(g(rng), g(rng));
        const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
        alpha /= norm;
        beta /= norm;

        std::vector<Amplitude> mix(8);
        mix[a] = alpha;
        mix[b] = beta;
        const auto lhs = run_circuit(c, StateVector(3, mix));
        const auto ra = run_circuit(c, StateVector::basis_index(3, a));
        const auto rb = run_circuit(c, StateVector::basis_index(3, b));
        for (std::size_t i = 0; i < 8; ++i) {
            ASSERT_LE(std::abs(lhs[i] - (alpha * ra[i] + beta * rb[i])), kEps);
        }
    }
}

TEST(Properties, full_register_readout_of_basis_state_is_delta) {
    for (std::uint64_t i = 0; i < 32; ++i) {
        const auto d = outcome_distribution(StateVector::basis_index(5, i), std::vector<Qubit>{0, 1, 2, 3, 4});
        ASSERT_TRUE(d.is_delta());
        ASSERT_EQ(d.most_likely(), i);
    }
}
