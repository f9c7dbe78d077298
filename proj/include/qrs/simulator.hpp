// Copyright 2026 The qrs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <random>
#include <vector>

#include "qrs/circuits.hpp"
#include "qrs/css.hpp"

namespace qrs {

struct MeasurementResult {
    int outcome = 0;
    bool deterministic = false;
};

/// Binary-symplectic stabilizer tableau (destabilizer + stabilizer halves
/// plus a scratch row). Phases are exponents of i kept mod 4; stabilizer
/// rows always hold 0 or 2 (signs +1 / -1).
class StabilizerState {
public:
    explicit StabilizerState(int n);

    int qubits() const { return n_; }

    void apply_h(int q);
    void apply_cx(int control, int target);
    void apply_x(int q);
    void apply_z(int q);
    MeasurementResult measure_z(int q, std::mt19937_64& rng);

    /// Conjugates the state by a Pauli error: every tableau row that
    /// anticommutes with E flips sign. E's own phase is a global phase and
    /// is not tracked.
    void apply_pauli(const PauliOperator& e);

    /// True iff +P (with P's sign) lies in the stabilizer group: solve the
    /// symplectic system for a generator subset, then compose the subset
    /// with exact phase tracking and compare signs.
    bool is_stabilized_by(const PauliOperator& p) const;

    /// Stabilizer generator i as a signed Pauli (XZ form).
    PauliOperator stabilizer_row(int i) const;

private:
    void rowsum(int h, int i);
    int phase_of_product(const std::vector<int>& rows) const;

    int n_;
    // Row layout: [0, n) destabilizers, [n, 2n) stabilizers, 2n scratch.
    std::vector<BinaryVector> x_, z_;
    std::vector<uint8_t> phase_;
};

struct MeasurementLog {
    std::vector<int> outcomes;
    std::vector<bool> deterministic;
    std::vector<bool> written;

    bool all_deterministic() const;
};

/// Runs a circuit on the tableau; MEASURE_Z outcomes land in their classical
/// slots. Randomness is drawn only from the caller's generator.
MeasurementLog apply_circuit(StabilizerState& s, const Circuit& c, std::mt19937_64& rng);

/// Exact amplitude vector for small registers; qubit q is bit q of the
/// amplitude index.
class DenseState {
public:
    static constexpr int kMaxQubits = 14;

    explicit DenseState(int n, const BinaryVector& input_bits);

    int qubits() const { return n_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amp_; }
    std::complex<double> amplitude(uint32_t basis_index) const { return amp_[basis_index]; }
    double norm() const;
    /// Probability that measuring qubit q yields 1.
    double marginal_one(int q) const;

    void apply_h(int q);
    void apply_cx(int control, int target);
    void apply_x(int q);
    void apply_z(int q);

private:
    int n_;
    std::vector<std::complex<double>> amp_;
};

/// Dense simulation of a measurement-free circuit on a basis-state input.
DenseState dense_simulate(const Circuit& c, const BinaryVector& input_bits);

}  // namespace qrs
