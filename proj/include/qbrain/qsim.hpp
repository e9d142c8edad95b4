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

// Dense statevector simulation.
//
// Bit order: a ket string "b0 b1 ... b(n-1)" is read left to right as qubits
// q0 .. q(n-1), and q0 is the MOST significant bit of the basis index. So for
// five qubits "00110" (q2 = q3 = 1) is index 0b00110 = 6. Gate matrices follow
// the same rule over their target list: targets[0] is the most significant
// bit of the local row/column index. Every module in this library uses this
// convention.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbrain/circuit.hpp"

namespace qbrain {

using Amplitude = std::complex<double>;

/// Tolerance for normalization and unitarity checks.
inline constexpr double kTolerance = 1e-9;

/// Largest register circuit_unitary() will expand into a dense matrix.
inline constexpr int kMaxUnitaryQubits = 6;

/// Square matrix over 2^arity basis states, row-major.
class GateMatrix {
public:
    GateMatrix() = default;
    GateMatrix(int arity, std::vector<Amplitude> entries);

    static GateMatrix identity(int arity);

    int arity() const { return arity_; }
    std::size_t dim() const { return std::size_t{1} << arity_; }

    Amplitude& operator()(std::size_t row, std::size_t col) { return entries_[row * dim() + col]; }
    const Amplitude& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim() + col];
    }

    std::span<const Amplitude> entries() const { return entries_; }

    /// U^dagger U == I elementwise within tol.
    bool is_unitary(double tol = kTolerance) const;

private:
    int arity_ = 0;
    std::vector<Amplitude> entries_;
};

/// Fixed matrices for the single-target kinds (x, h, s, sdg, t, tdg).
GateMatrix single_qubit_matrix(GateKind kind);

/// Full matrix of `op` over its own qubits (controls first, then targets),
/// with anticontrols honored. Arity is op.qubits().size().
GateMatrix op_matrix(const CircuitOp& op);

class StateVector {
public:
    /// |0...0> on n_qubits.
    explicit StateVector(int n_qubits);

    /// Takes ownership of explicit amplitudes; length must be a power of two
    /// and the vector must be normalized within kTolerance.
    StateVector(int n_qubits, std::vector<Amplitude> amps);

    /// Computational basis state named by a ket string such as "00110".
    static StateVector basis(int n_qubits, std::string_view bits);

    /// Computational basis state by index.
    static StateVector basis_index(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;

    /// Applies `gate` to the listed qubits in place. Throws std::invalid_argument
    /// for repeated or out-of-range targets, an arity mismatch, or a
    /// non-unitary gate.
    void apply(const GateMatrix& gate, std::span<const Qubit> targets);

    /// Applies one IR op (controls expanded, anticontrols honored) in place.
    void apply(const CircuitOp& op);

    /// If the state is a computational basis state (one amplitude of modulus 1
    /// within tol), returns its index.
    std::optional<std::uint64_t> basis_index_if_basis(double tol = kTolerance) const;

    /// Ket string of a basis state, e.g. "11001". Throws InternalConsistencyError
    /// if the state is not a basis state within tol.
    std::string basis_ket(double tol = kTolerance) const;

private:
    // Targets already validated and gate known to be unitary.
    void apply_unitary(const GateMatrix& gate, std::span<const Qubit> targets);

    int n_qubits_;
    std::vector<Amplitude> amps_;
};

/// Ket string for `index` on n qubits, q0 first.
std::string index_to_bits(std::uint64_t index, int n_bits);

/// Parses a ket string; throws std::invalid_argument on a length mismatch or a
/// character other than '0'/'1'.
std::uint64_t bits_to_index(std::string_view bits, int n_bits);

/// Functional form of StateVector::apply.
StateVector apply_gate(StateVector state, const GateMatrix& gate, std::span<const Qubit> targets);

/// Left-to-right application of every op. circuit.n_qubits() must match.
StateVector run_circuit(const Circuit& circuit, StateVector input);

/// Born-rule marginal over `measured`. Outcome index i encodes the measured
/// bits with measured[0] as its most significant bit, so bitstring(i) reads
/// in measured-list order.
class OutcomeDistribution {
public:
    OutcomeDistribution(std::vector<Qubit> measured, std::vector<double> probs);

    const std::vector<Qubit>& measured() const { return measured_; }
    std::size_t outcome_count() const { return probs_.size(); }
    const std::vector<double>& probabilities() const { return probs_; }

    double probability(std::size_t outcome) const { return probs_.at(outcome); }
    double probability(std::string_view bits) const;

    std::string bitstring(std::size_t outcome) const;

    /// Outcome with the highest probability (lowest index on ties).
    std::size_t most_likely() const;

    /// True when one outcome carries probability >= 1 - tol.
    bool is_delta(double tol = kTolerance) const;

private:
    std::vector<Qubit> measured_;
    std::vector<double> probs_;
};

OutcomeDistribution outcome_distribution(const StateVector& state, std::span<const Qubit> measured);

/// Column j is run_circuit(circuit, |j>). Throws ResourceLimitError when the
/// circuit has more than kMaxUnitaryQubits qubits.
GateMatrix circuit_unitary(const Circuit& circuit);

/// Elementwise comparison after removing global phase: the first entry of
/// largest magnitude in `a` fixes the reference position, and both matrices are
/// divided by their entry there before comparing.
bool equal_up_to_global_phase(const GateMatrix& a, const GateMatrix& b, double tol = kTolerance);

/// Plain elementwise comparison.
bool equal_exactly(const GateMatrix& a, const GateMatrix& b, double tol);

/// Largest elementwise deviation; infinity when shapes differ.
double max_abs_difference(const GateMatrix& a, const GateMatrix& b);

}  // namespace qbrain
