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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qbrain/errors.hpp"

namespace qbrain {
namespace {

constexpr int kMaxQubits = 24;

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                                    "], got " + std::to_string(n));
    }
}

// Bit of qubit q inside an n-qubit basis index (q0 is the MSB).
std::uint64_t qubit_mask(Qubit q, int n) { return std::uint64_t{1} << (n - 1 - q); }

void check_distinct_in_range(std::span<const Qubit> qs, int n) {
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (qs[i] < 0 || qs[i] >= n) {
            throw std::invalid_argument("qubit index " + std::to_string(qs[i]) +
                                        " out of range for " + std::to_string(n) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qs[i] == qs[j]) {
                throw std::invalid_argument("repeated qubit index " + std::to_string(qs[i]));
            }
        }
    }
}

}  // namespace

GateMatrix::GateMatrix(int arity, std::vector<Amplitude> entries)
    : arity_(arity), entries_(std::move(entries)) {
    if (arity < 0 || arity > 2 * kMaxUnitaryQubits) {
        throw std::invalid_argument("gate arity out of range");
    }
    if (entries_.size() != dim() * dim()) {
        throw std::invalid_argument("gate matrix needs 4^arity entries");
    }
}

GateMatrix GateMatrix::identity(int arity) {
    const std::size_t d = std::size_t{1} << arity;
    std::vector<Amplitude> e(d * d);
    for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1.0;
    return GateMatrix(arity, std::move(e));
}

bool GateMatrix::is_unitary(double tol) const {
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Amplitude acc = 0.0;
            for (std::size_t k = 0; k < d; ++k) acc += std::conj((*this)(k, i)) * (*this)(k, j);
            const Amplitude expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(acc - expect) > tol) return false;
        }
    }
    return true;
}

GateMatrix single_qubit_matrix(GateKind kind) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::numbers::sqrt2;
    const Amplitude t_phase = std::polar(1.0, std::numbers::pi / 4);
    switch (kind) {
        case GateKind::X: return GateMatrix(1, {0.0, 1.0, 1.0, 0.0});
        case GateKind::H: return GateMatrix(1, {r, r, r, -r});
        case GateKind::S: return GateMatrix(1, {1.0, 0.0, 0.0, 1i});
        case GateKind::Sdg: return GateMatrix(1, {1.0, 0.0, 0.0, -1i});
        case GateKind::T: return GateMatrix(1, {1.0, 0.0, 0.0, t_phase});
        case GateKind::Tdg: return GateMatrix(1, {1.0, 0.0, 0.0, std::conj(t_phase)});
        default: break;
    }
    throw UnsupportedGateError("no single-qubit matrix for " + std::string(gate_name(kind)));
}

GateMatrix op_matrix(const CircuitOp& op) {
    op.validate();
    if (op.controls.empty()) return single_qubit_matrix(op.kind);

    // Controlled X-type gate: a permutation that flips every target bit on the
    // rows where each control bit matches its polarity.
    const int nc = static_cast<int>(op.controls.size());
    const int nt = static_cast<int>(op.targets.size());
    const int arity = nc + nt;
    const std::size_t d = std::size_t{1} << arity;
    const std::size_t target_mask = (std::size_t{1} << nt) - 1;

    std::vector<Amplitude> e(d * d);
    for (std::size_t col = 0; col < d; ++col) {
        bool fires = true;
        for (int c = 0; c < nc; ++c) {
            const bool bit = (col >> (arity - 1 - c)) & 1u;
            const bool want = op.controls[c].polarity == Polarity::Positive;
            fires = fires && (bit == want);
        }
        const std::size_t row = fires ? (col ^ target_mask) : col;
        e[row * d + col] = 1.0;
    }
    return GateMatrix(arity, std::move(e));
}

std::string index_to_bits(std::uint64_t index, int n_bits) {
    std::string s(static_cast<std::size_t>(n_bits), '0');
    for (int q = 0; q < n_bits; ++q) {
        if (index & qubit_mask(q, n_bits)) s[q] = '1';
    }
    return s;
}

std::uint64_t bits_to_index(std::string_view bits, int n_bits) {
    if (bits.size() != static_cast<std::size_t>(n_bits)) {
        throw std::invalid_argument("bitstring \"" + std::string(bits) + "\" has length " +
                                    std::to_string(bits.size()) + ", expected " +
                                    std::to_string(n_bits));
    }
    std::uint64_t index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bitstring \"" + std::string(bits) +
                                        "\" contains a character other than 0/1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return index;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, 0.0);
    amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
    check_qubit_count(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("statevector length must be 2^n_qubits");
    }
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("statevector has a non-finite amplitude");
        }
    }
    if (std::abs(norm_squared() - 1.0) > kTolerance) {
        throw std::invalid_argument("statevector is not normalized");
    }
}

StateVector StateVector::basis(int n_qubits, std::string_view bits) {
    check_qubit_count(n_qubits);
    return basis_index(n_qubits, bits_to_index(bits, n_qubits));
}

StateVector StateVector::basis_index(int n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.size()) throw std::invalid_argument("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return acc;
}

void StateVector::apply(const GateMatrix& gate, std::span<const Qubit> targets) {
    if (static_cast<std::size_t>(gate.arity()) != targets.size()) {
        throw std::invalid_argument("gate arity " + std::to_string(gate.arity()) +
                                    " does not match " + std::to_string(targets.size()) +
                                    " targets");
    }
    check_distinct_in_range(targets, n_qubits_);
    if (!gate.is_unitary()) throw std::invalid_argument("gate matrix is not unitary");
    apply_unitary(gate, targets);
}

void StateVector::apply_unitary(const GateMatrix& gate, std::span<const Qubit> targets) {
    const int k = gate.arity();
    const std::size_t d = gate.dim();

    // offsets[local] is the global index contribution of local basis state
    // `local`, where targets[0] carries the local MSB.
    std::uint64_t all_targets = 0;
    std::vector<std::uint64_t> offsets(d, 0);
    for (int j = 0; j < k; ++j) {
        const std::uint64_t m = qubit_mask(targets[j], n_qubits_);
        all_targets |= m;
        for (std::size_t local = 0; local < d; ++local) {
            if ((local >> (k - 1 - j)) & 1u) offsets[local] |= m;
        }
    }

    std::vector<Amplitude> in(d), out(d);
    for (std::uint64_t base = 0; base < amps_.size(); ++base) {
        if (base & all_targets) continue;
        for (std::size_t l = 0; l < d; ++l) in[l] = amps_[base | offsets[l]];
        for (std::size_t r = 0; r < d; ++r) {
            Amplitude acc = 0.0;
            for (std::size_t c = 0; c < d; ++c) acc += gate(r, c) * in[c];
            out[r] = acc;
        }
        for (std::size_t l = 0; l < d; ++l) amps_[base | offsets[l]] = out[l];
    }
}

void StateVector::apply(const CircuitOp& op) {
    const auto qs = op.qubits();
    check_distinct_in_range(qs, n_qubits_);
    // op_matrix only yields X-type permutations and fixed Clifford+T matrices.
    apply_unitary(op_matrix(op), qs);
}

std::optional<std::uint64_t> StateVector::basis_index_if_basis(double tol) const {
    std::optional<std::uint64_t> found;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        const double mag = std::abs(amps_[i]);
        if (std::abs(mag - 1.0) <= tol) {
            if (found) return std::nullopt;
            found = i;
        } else if (mag > tol) {
            return std::nullopt;
        }
    }
    return found;
}

std::string StateVector::basis_ket(double tol) const {
    const auto idx = basis_index_if_basis(tol);
    if (!idx) throw InternalConsistencyError("state is not a computational basis state");
    return index_to_bits(*idx, n_qubits_);
}

StateVector apply_gate(StateVector state, const GateMatrix& gate, std::span<const Qubit> targets) {
    state.apply(gate, targets);
    return state;
}

StateVector run_circuit(const Circuit& circuit, StateVector input) {
    if (circuit.n_qubits() != input.n_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.n_qubits()) +
                                    " qubits but state has " + std::to_string(input.n_qubits()));
    }
    for (const auto& op : circuit.ops()) input.apply(op);
    return input;
}

OutcomeDistribution::OutcomeDistribution(std::vector<Qubit> measured, std::vector<double> probs)
    : measured_(std::move(measured)), probs_(std::move(probs)) {
    if (probs_.size() != (std::size_t{1} << measured_.size())) {
        throw std::invalid_argument("distribution needs 2^|measured| probabilities");
    }
}

double OutcomeDistribution::probability(std::string_view bits) const {
    return probs_.at(bits_to_index(bits, static_cast<int>(measured_.size())));
}

std::string OutcomeDistribution::bitstring(std::size_t outcome) const {
    return index_to_bits(outcome, static_cast<int>(measured_.size()));
}

std::size_t OutcomeDistribution::most_likely() const {
    return static_cast<std::size_t>(std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

bool OutcomeDistribution::is_delta(double tol) const {
    return probs_[most_likely()] >= 1.0 - tol;
}

OutcomeDistribution outcome_distribution(const StateVector& state, std::span<const Qubit> measured) {
    const int n = state.n_qubits();
    check_distinct_in_range(measured, n);
    const std::size_t m = measured.size();
    std::vector<double> probs(std::size_t{1} << m, 0.0);
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::size_t outcome = 0;
        for (std::size_t j = 0; j < m; ++j) {
            outcome = (outcome << 1) | ((i & qubit_mask(measured[j], n)) ? 1u : 0u);
        }
        probs[outcome] += std::norm(amps[i]);
    }
    return OutcomeDistribution({measured.begin(), measured.end()}, std::move(probs));
}

GateMatrix circuit_unitary(const Circuit& circuit) {
    const int n = circuit.n_qubits();
    if (n > kMaxUnitaryQubits) {
        throw ResourceLimitError("circuit_unitary is limited to " +
                                 std::to_string(kMaxUnitaryQubits) + " qubits, circuit has " +
                                 std::to_string(n));
    }
    const std::size_t d = std::size_t{1} << n;
    std::vector<Amplitude> e(d * d);
    for (std::size_t col = 0; col < d; ++col) {
        const auto out = run_circuit(circuit, StateVector::basis_index(n, col));
        for (std::size_t row = 0; row < d; ++row) e[row * d + col] = out[row];
    }
    return GateMatrix(n, std::move(e));
}

double max_abs_difference(const GateMatrix& a, const GateMatrix& b) {
    if (a.arity() != b.arity()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

bool equal_exactly(const GateMatrix& a, const GateMatrix& b, double tol) {
    return max_abs_difference(a, b) <= tol;
}

bool equal_up_to_global_phase(const GateMatrix& a, const GateMatrix& b, double tol) {
    if (a.arity() != b.arity()) return false;
    const auto ea = a.entries();
    const auto eb = b.entries();
    std::size_t ref = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        // Strict '>' keeps the first index among equal magnitudes.
        if (std::abs(ea[i]) > best + tol) {
            best = std::abs(ea[i]);
            ref = i;
        }
    }
    if (best <= tol || std::abs(eb[ref]) <= tol) return false;
    const Amplitude ra = ea[ref];
    const Amplitude rb = eb[ref];
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (std::abs(ea[i] / ra - eb[i] / rb) > tol) return false;
    }
    return true;
}

}  // namespace qbrain
