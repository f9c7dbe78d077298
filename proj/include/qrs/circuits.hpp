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

#include <string>
#include <vector>

#include "qrs/css.hpp"
#include "qrs/linalg.hpp"

namespace qrs {

enum class GateKind { H, CX, X, Z, MZ };

struct Gate {
    GateKind kind;
    int q0;      // target qubit (control for CX)
    int q1 = 0;  // CX target; classical slot for MZ
    bool operator==(const Gate&) const = default;
};

/// Ordered gate list; list order is execution order.
struct Circuit {
    int n_qubits = 0;
    int n_cbits = 0;
    std::vector<Gate> gates;

    void h(int q) { push({GateKind::H, check(q)}); }
    void cx(int control, int target);
    void x(int q) { push({GateKind::X, check(q)}); }
    void z(int q) { push({GateKind::Z, check(q)}); }
    void mz(int q, int slot);

    int count(GateKind kind) const;
    bool operator==(const Circuit&) const = default;

private:
    int check(int q) const;
    void push(Gate g) { gates.push_back(g); }
};

/// CNOT-only circuit realizing |v> -> |A v| for invertible A over F_2, by
/// Gauss-Jordan elimination with recorded row operations (a forced pivot
/// costs one extra CNOT instead of a swap). Gate count <= n^2 + 2n.
Circuit synthesize_linear(const BinaryMatrix& a);

/// Classical action of a CX/X-only circuit on a basis state; rejects H/Z/MZ.
BinaryVector apply_linear_circuit(const Circuit& c, const BinaryVector& in);

/// Encoder: Hadamards on the h-frequency block, then the expanded inverse
/// DFT. Message bits are placed on the message-frequency qubits, all other
/// inputs |0>. Requires a code built by build_quantum_rs.
Circuit build_encoder(const QuantumCssCode& q);

/// Syndrome extraction on data + 2kK ancillas: expanded DFT, CNOT copies of
/// the zero-frequency block into the bit-flip ancillas, an H sandwich around
/// CNOT copies of the h block into the phase ancillas, expanded inverse DFT,
/// then Z measurements of all ancillas. Ancilla readouts reproduce
/// classical_syndrome exactly (bit-flip slots first).
Circuit build_syndrome_circuit(const QuantumCssCode& q);

/// Text format, bit-exact: `qubits <n>`, optional `cbits <m>`, then one gate
/// per line (`h q`, `cx c t`, `x q`, `z q`, `mz q slot`), `#` comments.
std::string write_circuit(const Circuit& c);
/// Throws std::invalid_argument with the 1-based line number on bad input.
Circuit parse_circuit(const std::string& text);

}  // namespace qrs
