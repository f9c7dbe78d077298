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

#include "qrs/simulator.hpp"

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

using namespace qrs;

namespace {

// Independent oracle: the expected coset B(C) + w as a set of basis
// indices, enumerated brute-force from the binary code.
std::set<uint32_t> coset_indices(const QuantumCssCode& q, const BinaryVector& w) {
    std::set<uint32_t> out;
    q.binary_code().for_each_codeword([&](const std::vector<uint8_t>& c) {
        uint32_t idx = 0;
        for (size_t i = 0; i < c.size(); ++i) {
            if ((c[i] ^ (w.get(int(i)) ? 1 : 0)) & 1) idx |= uint32_t(1) << i;
        }
        out.insert(idx);
    });
    return out;
}

StabilizerState encode_basis_state(const QuantumCssCode& q, const Circuit& encoder, uint64_t j,
                                   std::mt19937_64& rng) {
    StabilizerState s(encoder.n_qubits);
    const auto msg = q.layout()->message_qubits();
    for (size_t t = 0; t < msg.size(); ++t) {
        if ((j >> t) & 1u) s.apply_x(msg[t]);
    }
    apply_circuit(s, encoder, rng);
    return s;
}

}  // namespace

TEST_CASE("fresh states are stabilized by +Z everywhere") {
    StabilizerState s1(1);
    CHECK(s1.is_stabilized_by(PauliOperator::single(1, 0, 'Z')));
    PauliOperator minus_z = PauliOperator::single(1, 0, 'Z');
    minus_z.negate();
    CHECK_FALSE(s1.is_stabilized_by(minus_z));

    StabilizerState s2(2);
    CHECK(s2.stabilizer_row(0).label() == "ZI");
    CHECK(s2.stabilizer_row(1).label() == "IZ");
    std::mt19937_64 rng(1);
    MeasurementResult m = s2.measure_z(0, rng);
    CHECK(m.outcome == 0);
    CHECK(m.deterministic);
}

TEST_CASE("H gives a random outcome; the flag says so") {
    std::mt19937_64 rng(42);
    int ones = 0;
    for (int trial = 0; trial < 50; ++trial) {
        StabilizerState s(1);
        s.apply_h(0);
        MeasurementResult m = s.measure_z(0, rng);
        CHECK_FALSE(m.deterministic);
        ones += m.outcome;
        // Post-measurement state is the observed eigenstate.
        MeasurementResult again = s.measure_z(0, rng);
        CHECK(again.deterministic);
        CHECK(again.outcome == m.outcome);
    }
    CHECK(ones > 10);
    CHECK(ones < 40);
}

TEST_CASE("CNOT on |10> yields |11>") {
    StabilizerState s(2);
    s.apply_x(0);
    s.apply_cx(0, 1);
    std::mt19937_64 rng(3);
    CHECK(s.measure_z(0, rng).outcome == 1);
    CHECK(s.measure_z(1, rng).outcome == 1);
}

TEST_CASE("apply_pauli flips exactly the anticommuting signs") {
    StabilizerState s(1);
    s.apply_pauli(PauliOperator::single(1, 0, 'X'));
    PauliOperator minus_z = PauliOperator::single(1, 0, 'Z');
    minus_z.negate();
    CHECK(s.is_stabilized_by(minus_z));

    // A commuting Pauli leaves the state unchanged.
    StabilizerState t(2);
    t.apply_pauli(PauliOperator::single(2, 1, 'X'));  // acts on qubit 1
    CHECK(t.is_stabilized_by(PauliOperator::single(2, 0, 'Z')));
}

TEST_CASE("encoded [[6,2]] states carry the full stabilizer group") {
    QuantumCssCode q = build_quantum_rs(2, 3);
    Circuit enc = build_encoder(q);
    std::mt19937_64 rng(7);
    for (uint64_t j = 0; j < 4; ++j) {
        StabilizerState s = encode_basis_state(q, enc, j, rng);
        for (const auto& p : q.x_stabilizers()) CHECK(s.is_stabilized_by(p));
        for (const auto& p : q.z_stabilizers()) CHECK(s.is_stabilized_by(p));
        // Logical Z signs encode j.
        for (int t = 0; t < q.logical_qubits(); ++t) {
            PauliOperator lz = q.logical_z()[t];
            if ((j >> t) & 1u) lz.negate();
            CHECK(s.is_stabilized_by(lz));
        }
    }
}

TEST_CASE("Z error flips exactly the X-supported generators") {
    QuantumCssCode q = build_quantum_rs(2, 3);
    Circuit enc = build_encoder(q);
    std::mt19937_64 rng(11);
    StabilizerState s = encode_basis_state(q, enc, 0, rng);
    s.apply_pauli(PauliOperator::single(6, 3, 'Z'));
    // Both generator rows {100111, 011110} touch qubit 3, so both X-type
    // stabilizers flip sign while the Z-type ones are untouched.
    for (const auto& p : q.x_stabilizers()) {
        CHECK_FALSE(s.is_stabilized_by(p));
        PauliOperator flipped = p;
        flipped.negate();
        CHECK(s.is_stabilized_by(flipped));
    }
    for (const auto& p : q.z_stabilizers()) CHECK(s.is_stabilized_by(p));
}

TEST_CASE("size mismatches are rejected") {
    StabilizerState s(3);
    CHECK_THROWS_AS(s.apply_pauli(PauliOperator::identity(2)), std::invalid_argument);
    CHECK_THROWS_AS(s.is_stabilized_by(PauliOperator::identity(4)), std::invalid_argument);
    Circuit c;
    c.n_qubits = 2;
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(apply_circuit(s, c, rng), std::invalid_argument);
}

TEST_CASE("dense simulation basics") {
    Circuit c;
    c.n_qubits = 1;
    c.h(0);
    DenseState s = dense_simulate(c, BinaryVector(1));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s.amplitude(0).real() - inv_sqrt2) < 1e-12);
    CHECK(std::abs(s.amplitude(1).real() - inv_sqrt2) < 1e-12);
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);

    Circuit meas;
    meas.n_qubits = 1;
    meas.n_cbits = 1;
    meas.mz(0, 0);
    CHECK_THROWS_AS(dense_simulate(meas, BinaryVector(1)), std::invalid_argument);
    Circuit big;
    big.n_qubits = 15;
    CHECK_THROWS_AS(dense_simulate(big, BinaryVector(15)), std::invalid_argument);
}

TEST_CASE("dense [[6,2]] encoder puts 1/sqrt|C| on exactly one coset") {
    QuantumCssCode q = build_quantum_rs(2, 3);
    Circuit enc = build_encoder(q);
    const auto msg = q.layout()->message_qubits();
    for (uint64_t j = 0; j < 4; ++j) {
        BinaryVector in(6);
        for (size_t t = 0; t < msg.size(); ++t) in.set(msg[t], (j >> t) & 1u);
        DenseState s = dense_simulate(enc, in);
        CHECK(std::abs(s.norm() - 1.0) < 1e-12);
        const std::set<uint32_t> coset = coset_indices(q, q.coset_representative(j));
        REQUIRE(coset.size() == 4);
        for (uint32_t idx = 0; idx < 64; ++idx) {
            const double expected = coset.count(idx) ? 0.5 : 0.0;
            CHECK(std::abs(s.amplitude(idx).real() - expected) < 1e-10);
            CHECK(std::abs(s.amplitude(idx).imag()) < 1e-10);
        }
    }
}

TEST_CASE("tableau and dense engines agree on random Clifford circuits") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + int(rng() % 9);  // up to 10 qubits
        Circuit c;
        c.n_qubits = n;
        for (int g = 0; g < 30; ++g) {
            switch (rng() % 4) {
                case 0: c.h(int(rng() % n)); break;
                case 1: {
                    int a = int(rng() % n), b = int(rng() % n);
                    if (a != b) c.cx(a, b);
                    break;
                }
                case 2: c.x(int(rng() % n)); break;
                case 3: c.z(int(rng() % n)); break;
            }
        }
        DenseState dense = dense_simulate(c, BinaryVector(n));
        CHECK(std::abs(dense.norm() - 1.0) < 1e-12);
        // Reachable states keep full symplectic rank.
        {
            StabilizerState s(n);
            std::mt19937_64 mrng(55);
            apply_circuit(s, c, mrng);
            BinaryMatrix symp(n, 2 * n);
            for (int i = 0; i < n; ++i) {
                const PauliOperator row = s.stabilizer_row(i);
                for (int q = 0; q < n; ++q) {
                    symp.set(i, q, row.x_bits().get(q));
                    symp.set(i, n + q, row.z_bits().get(q));
                }
            }
            CHECK(symp.rank() == n);
        }
        for (int q = 0; q < n; ++q) {
            StabilizerState s(n);
            std::mt19937_64 mrng(55);
            apply_circuit(s, c, mrng);
            MeasurementResult m = s.measure_z(q, mrng);
            const double p1 = dense.marginal_one(q);
            if (m.deterministic) {
                CHECK(std::abs(p1 - double(m.outcome)) < 1e-10);
            } else {
                CHECK(std::abs(p1 - 0.5) < 1e-10);
            }
        }
    }
}

TEST_CASE("tableau stabilizer rows are exact dense-state symmetries") {
    // For random Clifford circuits, every signed stabilizer row reported by
    // the tableau must fix the dense state amplitude-for-amplitude; a row
    // with the flipped sign must not.
    std::mt19937_64 rng(404);
    auto apply_pauli_dense = [](DenseState& s, const PauliOperator& p) {
        for (int q = 0; q < p.qubits(); ++q) {
            if (p.z_bits().get(q)) s.apply_z(q);
        }
        for (int q = 0; q < p.qubits(); ++q) {
            if (p.x_bits().get(q)) s.apply_x(q);
        }
    };
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + int(rng() % 7);
        Circuit c;
        c.n_qubits = n;
        for (int g = 0; g < 25; ++g) {
            switch (rng() % 4) {
                case 0: c.h(int(rng() % n)); break;
                case 1: {
                    int a = int(rng() % n), b = int(rng() % n);
                    if (a != b) c.cx(a, b);
                    break;
                }
                case 2: c.x(int(rng() % n)); break;
                case 3: c.z(int(rng() % n)); break;
            }
        }
        DenseState ref = dense_simulate(c, BinaryVector(n));
        StabilizerState s(n);
        std::mt19937_64 mrng(1);
        apply_circuit(s, c, mrng);
        for (int i = 0; i < n; ++i) {
            const PauliOperator row = s.stabilizer_row(i);
            DenseState moved = dense_simulate(c, BinaryVector(n));
            apply_pauli_dense(moved, row);
            double delta = 0, delta_flipped = 0;
            for (size_t idx = 0; idx < ref.amplitudes().size(); ++idx) {
                delta += std::abs(double(row.sign()) * moved.amplitudes()[idx] -
                                  ref.amplitudes()[idx]);
                delta_flipped += std::abs(double(-row.sign()) * moved.amplitudes()[idx] -
                                          ref.amplitudes()[idx]);
            }
            CHECK(delta < 1e-9);
            CHECK(delta_flipped > 1e-3);
        }
    }
}

TEST_CASE("syndrome circuit readouts match the classical syndrome map") {
    QuantumCssCode q = build_quantum_rs(2, 3);
    Circuit enc = build_encoder(q);
    Circuit syn = build_syndrome_circuit(q);
    std::mt19937_64 rng(13);

    auto run_syndrome = [&](const PauliOperator& err, uint64_t j) {
        StabilizerState s(syn.n_qubits);
        const auto msg = q.layout()->message_qubits();
        for (size_t t = 0; t < msg.size(); ++t) {
            if ((j >> t) & 1u) s.apply_x(msg[t]);
        }
        // Encoder acts on the data prefix of the larger register.
        for (const Gate& g : enc.gates) {
            if (g.kind == GateKind::H) s.apply_h(g.q0);
            else s.apply_cx(g.q0, g.q1);
        }
        PauliOperator padded(syn.n_qubits);
        for (int i = 0; i < 6; ++i) {
            if (err.x_bits().get(i)) padded = padded.composed_with(PauliOperator::single(syn.n_qubits, i, 'X'));
            if (err.z_bits().get(i)) padded = padded.composed_with(PauliOperator::single(syn.n_qubits, i, 'Z'));
        }
        s.apply_pauli(padded);
        return std::pair{std::move(s), apply_circuit(s, syn, rng)};
    };

    // Identity: all four ancillas deterministically zero.
    {
        auto [s, log] = run_syndrome(PauliOperator::identity(6), 0);
        CHECK(log.all_deterministic());
        for (int i = 0; i < 4; ++i) CHECK(log.outcomes[i] == 0);
    }
    // X on qubit 0: bit-flip ancillas (1,0), phase ancillas (0,0).
    {
        auto [s, log] = run_syndrome(PauliOperator::single(6, 0, 'X'), 1);
        CHECK(log.all_deterministic());
        CHECK(log.outcomes[0] == 1);
        CHECK(log.outcomes[1] == 0);
        CHECK(log.outcomes[2] == 0);
        CHECK(log.outcomes[3] == 0);
    }
    // Every weight-1 error agrees with classical_syndrome, and repeating the
    // extraction reproduces the readout (non-demolition).
    for (int qb = 0; qb < 6; ++qb) {
        for (char kind : {'X', 'Y', 'Z'}) {
            PauliOperator e = PauliOperator::single(6, qb, kind);
            auto [sx, sz] = classical_syndrome(q, e);
            auto [s, log] = run_syndrome(e, 2);
            CHECK(log.all_deterministic());
            for (int i = 0; i < 2; ++i) {
                CHECK(log.outcomes[i] == (sx.get(i) ? 1 : 0));
                CHECK(log.outcomes[2 + i] == (sz.get(i) ? 1 : 0));
            }
            // Reset the measured ancillas to |0> and extract again: the data
            // register still carries E, so the readout repeats.
            for (int i = 0; i < 4; ++i) {
                if (log.outcomes[i]) s.apply_x(6 + i);
            }
            MeasurementLog again = apply_circuit(s, syn, rng);
            CHECK(again.all_deterministic());
            CHECK(again.outcomes == log.outcomes);
        }
    }
}
