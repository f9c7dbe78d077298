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

#include "qrs/circuits.hpp"

#include <sstream>
#include <stdexcept>

namespace qrs {

int Circuit::check(int q) const {
    if (q < 0 || q >= n_qubits) throw std::out_of_range("qubit index out of range");
    return q;
}

void Circuit::cx(int control, int target) {
    check(control);
    check(target);
    if (control == target) throw std::invalid_argument("CNOT control equals target");
    push({GateKind::CX, control, target});
}

void Circuit::mz(int q, int slot) {
    check(q);
    if (slot < 0 || slot >= n_cbits) throw std::out_of_range("classical slot out of range");
    push({GateKind::MZ, q, slot});
}

int Circuit::count(GateKind kind) const {
    int c = 0;
    for (const Gate& g : gates) c += (g.kind == kind);
    return c;
}

Circuit synthesize_linear(const BinaryMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("synthesize_linear needs a square matrix");
    const int n = a.rows();
    BinaryMatrix m(a);
    // Row operation "row t += row c" is the elementary matrix of CNOT(c->t).
    // Reducing A to I by left operations R_p ... R_1 factors A = R_1 ... R_p,
    // so the gate list is the recorded operations in reverse.
    std::vector<std::pair<int, int>> ops;  // (control c, target t)
    for (int col = 0; col < n; ++col) {
        if (!m.get(col, col)) {
            int pivot = -1;
            for (int r = col + 1; r < n; ++r) {
                if (m.get(r, col)) { pivot = r; break; }
            }
            if (pivot < 0) throw std::invalid_argument("matrix is singular over F_2");
            m.xor_row_into(pivot, col);
            ops.emplace_back(pivot, col);
        }
        for (int r = 0; r < n; ++r) {
            if (r != col && m.get(r, col)) {
                m.xor_row_into(col, r);
                ops.emplace_back(col, r);
            }
        }
    }
    Circuit c;
    c.n_qubits = n;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) c.cx(it->first, it->second);
    return c;
}

BinaryVector apply_linear_circuit(const Circuit& c, const BinaryVector& in) {
    if (in.size() != c.n_qubits) throw std::invalid_argument("input width mismatch");
    BinaryVector v(in);
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::CX:
                if (v.get(g.q0)) v.flip(g.q1);
                break;
            case GateKind::X:
                v.flip(g.q0);
                break;
            default:
                throw std::invalid_argument("apply_linear_circuit: non-linear gate present");
        }
    }
    return v;
}

namespace {

const FrequencyLayout& rs_layout(const QuantumCssCode& q) {
    if (!q.layout()) {
        throw std::invalid_argument("circuit construction needs a Reed-Solomon frequency layout");
    }
    return *q.layout();
}

}  // namespace

Circuit build_encoder(const QuantumCssCode& q) {
    const FrequencyLayout& layout = rs_layout(q);
    const FieldContextPtr& f = q.field();
    const Basis& b = *q.basis();

    Circuit c;
    c.n_qubits = layout.num_qubits();
    for (int freq : layout.h_freqs()) {
        for (int bit = 0; bit < layout.k; ++bit) c.h(layout.qubit_of(freq, bit));
    }
    const Circuit linear = synthesize_linear(binary_expand_matrix(idft_matrix(f), b));
    c.gates.insert(c.gates.end(), linear.gates.begin(), linear.gates.end());
    return c;
}

Circuit build_syndrome_circuit(const QuantumCssCode& q) {
    const FrequencyLayout& layout = rs_layout(q);
    const FieldContextPtr& f = q.field();
    const Basis& b = *q.basis();
    const int k = layout.k;
    const int n_data = layout.num_qubits();
    const int kk = layout.num_check_qubits();

    Circuit c;
    c.n_qubits = n_data + 2 * kk;
    c.n_cbits = 2 * kk;
    const int bitflip_base = n_data;
    const int phase_base = n_data + kk;

    const Circuit dft_circ = synthesize_linear(binary_expand_matrix(dft_matrix(f), b));
    const Circuit idft_circ = synthesize_linear(binary_expand_matrix(idft_matrix(f), b));

    // (1) to the frequency domain
    c.gates.insert(c.gates.end(), dft_circ.gates.begin(), dft_circ.gates.end());
    // (2) bit-flip syndrome: copy the zero-frequency block {1..K}
    for (int t = 0; t < layout.code_dim; ++t) {
        for (int bit = 0; bit < k; ++bit) {
            c.cx(layout.qubit_of(1 + t, bit), bitflip_base + t * k + bit);
        }
    }
    // (3)-(5) phase syndrome: H sandwich around copies of the h block.
    // Frequency N-1-t of the inverse transform carries the same parity row
    // as frequency 1+t of the forward transform, so the h block is paired in
    // reversed frequency order to align both syndrome halves.
    for (int freq : layout.h_freqs()) {
        for (int bit = 0; bit < k; ++bit) c.h(layout.qubit_of(freq, bit));
    }
    for (int t = 0; t < layout.code_dim; ++t) {
        const int freq = layout.n_symbols - 1 - t;
        for (int bit = 0; bit < k; ++bit) {
            c.cx(layout.qubit_of(freq, bit), phase_base + t * k + bit);
        }
    }
    for (int freq : layout.h_freqs()) {
        for (int bit = 0; bit < k; ++bit) c.h(layout.qubit_of(freq, bit));
    }
    // (6) back to the time domain
    c.gates.insert(c.gates.end(), idft_circ.gates.begin(), idft_circ.gates.end());
    // (7) read out all ancillas, bit-flip block first
    for (int i = 0; i < 2 * kk; ++i) c.mz(n_data + i, i);
    return c;
}

std::string write_circuit(const Circuit& c) {
    std::ostringstream os;
    os << "qubits " << c.n_qubits << "\n";
    if (c.n_cbits > 0) os << "cbits " << c.n_cbits << "\n";
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: os << "h " << g.q0 << "\n"; break;
            case GateKind::CX: os << "cx " << g.q0 << " " << g.q1 << "\n"; break;
            case GateKind::X: os << "x " << g.q0 << "\n"; break;
            case GateKind::Z: os << "z " << g.q0 << "\n"; break;
            case GateKind::MZ: os << "mz " << g.q0 << " " << g.q1 << "\n"; break;
        }
    }
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& reason) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + reason);
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    Circuit c;
    bool have_qubits = false;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string op;
        if (!(ls >> op)) continue;  // blank/comment line
        auto want_int = [&](const char* what) {
            long v;
            if (!(ls >> v)) parse_fail(lineno, std::string("expected ") + what);
            return static_cast<int>(v);
        };
        auto expect_end = [&] {
            std::string extra;
            if (ls >> extra) parse_fail(lineno, "trailing token '" + extra + "'");
        };
        try {
            if (op == "qubits") {
                if (have_qubits) parse_fail(lineno, "duplicate qubits line");
                c.n_qubits = want_int("qubit count");
                if (c.n_qubits <= 0) parse_fail(lineno, "qubit count must be positive");
                have_qubits = true;
                expect_end();
            } else if (!have_qubits) {
                parse_fail(lineno, "first line must be 'qubits <n>'");
            } else if (op == "cbits") {
                c.n_cbits = want_int("classical bit count");
                expect_end();
            } else if (op == "h") {
                c.h(want_int("qubit"));
                expect_end();
            } else if (op == "x") {
                c.x(want_int("qubit"));
                expect_end();
            } else if (op == "z") {
                c.z(want_int("qubit"));
                expect_end();
            } else if (op == "cx") {
                const int a = want_int("control");
                const int b = want_int("target");
                c.cx(a, b);
                expect_end();
            } else if (op == "mz") {
                const int q = want_int("qubit");
                const int slot = want_int("slot");
                c.mz(q, slot);
                expect_end();
            } else {
                parse_fail(lineno, "unknown gate '" + op + "'");
            }
        } catch (const std::out_of_range& e) {
            parse_fail(lineno, e.what());
        }
    }
    if (!have_qubits) parse_fail(lineno == 0 ? 1 : lineno, "missing 'qubits' header");
    return c;
}

}  // namespace qrs
