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

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrs/codes.hpp"
#include "qrs/linalg.hpp"
#include "qrs/spectral.hpp"

namespace qrs {

/// A signed n-qubit Pauli operator in X/Z form: sign * prod_q X^{x_q} Z^{z_q}.
/// A position with x = z = 1 is sigma_y up to phase. The weight is the number
/// of positions where x or z is set.
class PauliOperator {
public:
    explicit PauliOperator(int n) : n_(n), x_(n), z_(n), sign_(+1) {}
    PauliOperator(BinaryVector x, BinaryVector z, int sign = +1);

    static PauliOperator identity(int n) { return PauliOperator(n); }
    /// kind is one of 'X', 'Y', 'Z'.
    static PauliOperator single(int n, int qubit, char kind);
    static PauliOperator x_string(const BinaryVector& support);
    static PauliOperator z_string(const BinaryVector& support);

    int qubits() const { return n_; }
    const BinaryVector& x_bits() const { return x_; }
    const BinaryVector& z_bits() const { return z_; }
    int sign() const { return sign_; }
    void negate() { sign_ = -sign_; }

    int weight() const;
    bool is_identity() const { return x_.is_zero() && z_.is_zero(); }
    /// Symplectic commutation: true iff x1.z2 + z1.x2 = 0.
    bool commutes_with(const PauliOperator& o) const;

    /// XZ-form composition: signs multiply with the (-1)^{z1.x2} reordering
    /// factor.
    PauliOperator composed_with(const PauliOperator& o) const;

    bool operator==(const PauliOperator& o) const {
        return n_ == o.n_ && x_ == o.x_ && z_ == o.z_ && sign_ == o.sign_;
    }

    /// Label string over {I, X, Y, Z}, e.g. "XIIXXX".
    std::string label() const;

private:
    int n_;
    BinaryVector x_, z_;
    int sign_;
};

/// A CSS code built from a weakly self-dual binary code C: the X- and Z-type
/// stabilizer generators share the rows of one generator matrix of C, the
/// logical X operators are X-strings of coset representatives of
/// C_dual / C, and the logical Z operators are the matching Z-strings fixed
/// by symplectic biorthogonality.
class QuantumCssCode {
public:
    int qubits() const { return n_; }
    int logical_qubits() const { return k_logical_; }

    /// Generator matrix G of the underlying binary code; rows are the
    /// supports of both the X- and Z-type stabilizer generators, and the
    /// syndrome map is s = G e.
    const BinaryMatrix& stabilizer_matrix() const { return stab_; }
    std::vector<PauliOperator> x_stabilizers() const;
    std::vector<PauliOperator> z_stabilizers() const;

    const LinearCode& binary_code() const { return code_; }
    const LinearCode& binary_dual() const { return dual_; }

    /// Rows span a complement of C inside C_dual; row t carries logical
    /// qubit t.
    const BinaryMatrix& coset_basis() const { return coset_basis_; }
    /// w_j for logical basis state j: bit t of j scales coset basis row t.
    BinaryVector coset_representative(uint64_t j) const;
    /// All 2^{k_logical} representatives, w_0 = 0 first.
    std::vector<BinaryVector> coset_representatives(uint64_t budget = kEnumerationBudget) const;

    const std::vector<PauliOperator>& logical_x() const { return logical_x_; }
    const std::vector<PauliOperator>& logical_z() const { return logical_z_; }

    int distance_bound() const { return distance_bound_; }
    std::optional<int> distance_exact() const { return distance_exact_; }

    /// True iff X^x Z^z lies in the stabilizer group up to phase, i.e. both
    /// supports lie in the row space of G.
    bool stabilizer_contains(const BinaryVector& x_part, const BinaryVector& z_part) const;

    /// Present when the code was built from a Reed-Solomon instance.
    const std::optional<FrequencyLayout>& layout() const { return layout_; }
    const FieldContextPtr& field() const { return field_; }
    const std::optional<Basis>& basis() const { return basis_; }
    std::optional<int> designed_delta() const { return delta_; }

private:
    friend QuantumCssCode build_css(const LinearCode& cbin);
    friend QuantumCssCode build_quantum_rs(int k, int delta);
    QuantumCssCode() = default;
    void derive_logicals();

    int n_ = 0;
    int k_logical_ = 0;
    BinaryMatrix stab_;
    BinaryMatrix stab_rref_;
    LinearCode code_{FieldContext::gf2(), 0, FieldMatrix(FieldContext::gf2(), 0, 0)};
    LinearCode dual_{FieldContext::gf2(), 0, FieldMatrix(FieldContext::gf2(), 0, 0)};
    BinaryMatrix coset_basis_;
    std::vector<PauliOperator> logical_x_, logical_z_;
    int distance_bound_ = 1;
    std::optional<int> distance_exact_;
    std::optional<FrequencyLayout> layout_;
    FieldContextPtr field_;
    std::optional<Basis> basis_;
    std::optional<int> delta_;
};

/// CSS construction from a weakly self-dual binary code with dim >= 1.
QuantumCssCode build_css(const LinearCode& cbin);

/// The quantum Reed-Solomon code: reed_solomon -> binary_expansion over the
/// self-dual basis -> CSS construction, with the stabilizer generator matrix
/// and coset basis derived from the frequency layout so that the synthesized
/// circuits reproduce the classical syndrome map bit for bit.
QuantumCssCode build_quantum_rs(int k, int delta);

/// s_x = G x_bits(E), s_z = G z_bits(E).
std::pair<BinaryVector, BinaryVector> classical_syndrome(const QuantumCssCode& q,
                                                         const PauliOperator& e);

/// Syndrome-indexed lookup of minimum-weight corrections for all Pauli
/// errors of weight <= t.
class DecoderTable {
public:
    int correction_radius() const { return t_; }
    size_t size() const { return table_.size(); }

    /// The stored correction, or nullopt when the syndrome is outside the
    /// table (detected but uncorrectable). The zero syndrome maps to the
    /// identity.
    std::optional<PauliOperator> decode(const BinaryVector& s_x, const BinaryVector& s_z) const;

private:
    friend DecoderTable build_decoder_table(const QuantumCssCode& q, int t, uint64_t budget);
    int n_ = 0;
    int t_ = 0;
    std::unordered_map<std::string, PauliOperator> table_;
};

inline constexpr uint64_t kDecoderTableBudget = 1000000;

/// Enumerates all errors of weight <= t (positions lexicographic, kinds
/// X, Z, Y per position, weights ascending) and records the first error
/// producing each syndrome. Throws std::invalid_argument when t exceeds the
/// code's correction capability.
DecoderTable build_decoder_table(const QuantumCssCode& q, int t,
                                 uint64_t budget = kDecoderTableBudget);

/// Default correction radius: floor((d_exact - 1)/2) when the exact distance
/// is known, floor(K/2) from the designed bound otherwise.
int default_correction_radius(const QuantumCssCode& q);

/// Structured text export: parameter line plus stabilizer rows as X/Z strings.
std::string describe_code(const QuantumCssCode& q);

}  // namespace qrs
