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

#include "qrs/css.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace qrs;

TEST_CASE("Pauli operator basics") {
    PauliOperator id = PauliOperator::identity(3);
    CHECK(id.weight() == 0);
    CHECK(id.label() == "III");

    PauliOperator y = PauliOperator::single(4, 2, 'Y');
    CHECK(y.weight() == 1);
    CHECK(y.label() == "IIYI");

    PauliOperator x0 = PauliOperator::single(2, 0, 'X');
    PauliOperator z0 = PauliOperator::single(2, 0, 'Z');
    PauliOperator z1 = PauliOperator::single(2, 1, 'Z');
    CHECK_FALSE(x0.commutes_with(z0));
    CHECK(x0.commutes_with(z1));
    // Composition tracks the XZ reordering sign: (Z0)(X0) = -X0 Z0.
    PauliOperator zx = z0.composed_with(x0);
    CHECK(zx.sign() == -1);
    CHECK(zx.label() == "YI");
    PauliOperator xz = x0.composed_with(z0);
    CHECK(xz.sign() == +1);
}

TEST_CASE("build_quantum_rs(2, 3): the [[6,2]] code") {
    QuantumCssCode q = build_quantum_rs(2, 3);
    CHECK(q.qubits() == 6);
    CHECK(q.logical_qubits() == 2);
    REQUIRE(q.distance_exact().has_value());
    CHECK(*q.distance_exact() == 2);
    CHECK(q.distance_bound() == 2);  // K + 1 = 2

    // Stabilizer generators on the supports {100111, 011110}.
    REQUIRE(q.stabilizer_matrix().rows() == 2);
    CHECK(q.stabilizer_matrix().row(0).to_string() == "100111");
    CHECK(q.stabilizer_matrix().row(1).to_string() == "011110");
    auto xs = q.x_stabilizers();
    auto zs = q.z_stabilizers();
    CHECK(xs[0].label() == "XIIXXX");
    CHECK(zs[1].label() == "IZZZZI");

    // All stabilizers commute (CSS with G G^T = 0).
    for (const auto& a : xs) {
        for (const auto& b : zs) CHECK(a.commutes_with(b));
    }

    // Coset representatives: the four cosets of B(C) in B(C_dual).
    auto reps = q.coset_representatives();
    REQUIRE(reps.size() == 4);
    CHECK(reps[0].is_zero());
    std::set<std::string> rep_set;
    for (const auto& r : reps) rep_set.insert(r.to_string());
    CHECK(rep_set == std::set<std::string>{"000000", "101010", "010101", "111111"});
    // Pairwise distinct cosets (difference never inside B(C)).
    for (size_t i = 0; i < reps.size(); ++i) {
        CHECK(q.binary_dual().contains(reps[i]));
        for (size_t j = i + 1; j < reps.size(); ++j) {
            BinaryVector diff = reps[i];
            diff.xor_in(reps[j]);
            CHECK_FALSE(q.binary_code().contains(diff));
        }
    }
}

TEST_CASE("parameter theorem instances") {
    QuantumCssCode q53 = build_quantum_rs(3, 5);
    CHECK(q53.qubits() == 21);
    CHECK(q53.logical_qubits() == 3);
    CHECK(q53.distance_bound() == 4);  // K = 3
    REQUIRE(q53.distance_exact().has_value());
    CHECK(*q53.distance_exact() >= 4);

    QuantumCssCode q63 = build_quantum_rs(3, 6);
    CHECK(q63.qubits() == 21);
    CHECK(q63.logical_qubits() == 9);
    CHECK(q63.distance_bound() == 3);  // K = 2
    REQUIRE(q63.distance_exact().has_value());
    CHECK(*q63.distance_exact() >= 3);

    // Dimension identity n - (independent stabilizer rows) * 2 = k_logical.
    for (const QuantumCssCode* q : {&q53, &q63}) {
        CHECK(q->qubits() - 2 * q->stabilizer_matrix().rows() == q->logical_qubits());
        CHECK(q->stabilizer_matrix().rank() == q->stabilizer_matrix().rows());
    }
}

TEST_CASE("generic build_css accepts B(C) and rejects bad input") {
    auto f = make_field(2);
    Basis b = find_self_dual_basis(f);
    LinearCode cbin = binary_expansion(reed_solomon(f, 3), b);
    QuantumCssCode q = build_css(cbin);
    CHECK(q.qubits() == 6);
    CHECK(q.logical_qubits() == 2);
    // Logical pairs satisfy the symplectic commutation matrix.
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(q.logical_x()[i].commutes_with(q.logical_z()[j]) == (i != j));
        }
    }

    // A self-dual input yields a stabilizer state: zero logical qubits.
    LinearCode rep2(FieldContext::gf2(), 2,
                    [] {
                        FieldMatrix m(FieldContext::gf2(), 1, 2);
                        m.set(0, 0, 1);
                        m.set(0, 1, 1);
                        return m;
                    }());
    QuantumCssCode state = build_css(rep2);
    CHECK(state.logical_qubits() == 0);
    CHECK(state.logical_x().empty());
    CHECK(state.coset_representatives().size() == 1);

    // Not weakly self-dual: the full space.
    LinearCode full(FieldContext::gf2(), 4,
                    FieldMatrix::identity(FieldContext::gf2(), 4));
    CHECK_THROWS_AS(build_css(full), std::invalid_argument);
    // Dimension zero.
    LinearCode zero(FieldContext::gf2(), 4, FieldMatrix(FieldContext::gf2(), 0, 4));
    CHECK_THROWS_AS(build_css(zero), std::invalid_argument);
    // Non-binary input.
    CHECK_THROWS_AS(build_css(reed_solomon(f, 3)), std::invalid_argument);
}

TEST_CASE("classical syndromes of the [[6,2]] code") {
    QuantumCssCode q = build_quantum_rs(2, 3);

    auto [sx0, sz0] = classical_syndrome(q, PauliOperator::identity(6));
    CHECK(sx0.is_zero());
    CHECK(sz0.is_zero());

    auto [sx1, sz1] = classical_syndrome(q, PauliOperator::single(6, 0, 'X'));
    CHECK(sx1.to_string() == "10");
    CHECK(sz1.is_zero());

    auto [sx2, sz2] = classical_syndrome(q, PauliOperator::single(6, 3, 'Z'));
    CHECK(sx2.is_zero());
    CHECK(sz2.to_string() == "11");

    CHECK_THROWS_AS(classical_syndrome(q, PauliOperator::identity(5)), std::invalid_argument);
}

TEST_CASE("logical operators commute with the stabilizer and pair up") {
    for (auto [k, delta] : {std::pair{2, 3}, std::pair{3, 5}, std::pair{3, 6}, std::pair{3, 7}}) {
        QuantumCssCode q = build_quantum_rs(k, delta);
        for (const auto& lx : q.logical_x()) {
            for (const auto& s : q.x_stabilizers()) CHECK(lx.commutes_with(s));
            for (const auto& s : q.z_stabilizers()) CHECK(lx.commutes_with(s));
        }
        for (const auto& lz : q.logical_z()) {
            for (const auto& s : q.x_stabilizers()) CHECK(lz.commutes_with(s));
            for (const auto& s : q.z_stabilizers()) CHECK(lz.commutes_with(s));
        }
        for (int i = 0; i < q.logical_qubits(); ++i) {
            for (int j = 0; j < q.logical_qubits(); ++j) {
                CHECK(q.logical_x()[i].commutes_with(q.logical_z()[j]) == (i != j));
            }
        }
    }
}

TEST_CASE("detection: every light non-stabilizer error has a nonzero syndrome") {
    // [[6,2,2]]: weight-1 sweep.
    QuantumCssCode q62 = build_quantum_rs(2, 3);
    for (int qb = 0; qb < 6; ++qb) {
        for (char kind : {'X', 'Y', 'Z'}) {
            PauliOperator e = PauliOperator::single(6, qb, kind);
            auto [sx, sz] = classical_syndrome(q62, e);
            const bool detected = !sx.is_zero() || !sz.is_zero();
            const bool trivial = q62.stabilizer_contains(e.x_bits(), e.z_bits());
            CHECK((detected || trivial));
        }
    }

    // [[21,9,3]]: exhaustive weight-1 and weight-2 sweep.
    QuantumCssCode q = build_quantum_rs(3, 6);
    const int d = *q.distance_exact();
    REQUIRE(d >= 3);
    const char kinds[3] = {'X', 'Z', 'Y'};
    for (int a = 0; a < 21; ++a) {
        for (int ka = 0; ka < 3; ++ka) {
            PauliOperator ea = PauliOperator::single(21, a, kinds[ka]);
            auto [sx, sz] = classical_syndrome(q, ea);
            CHECK((!sx.is_zero() || !sz.is_zero()));
            if (d >= 3) {
                for (int b = a + 1; b < 21; ++b) {
                    for (int kb = 0; kb < 3; ++kb) {
                        PauliOperator e = ea.composed_with(PauliOperator::single(21, b, kinds[kb]));
                        auto [sx2, sz2] = classical_syndrome(q, e);
                        const bool detected = !sx2.is_zero() || !sz2.is_zero();
                        const bool trivial = q.stabilizer_contains(e.x_bits(), e.z_bits());
                        CHECK((detected || trivial));
                    }
                }
            }
        }
    }
}

TEST_CASE("decoder table for [[21,9]] at t = 1 corrects every weight-1 error") {
    QuantumCssCode q = build_quantum_rs(3, 6);
    DecoderTable table = build_decoder_table(q, 1);
    CHECK(table.size() == 64);  // identity + 21*3

    // Zero syndrome decodes to the identity.
    BinaryVector zs(q.stabilizer_matrix().rows());
    auto id = table.decode(zs, zs);
    REQUIRE(id.has_value());
    CHECK(id->is_identity());

    for (int qb = 0; qb < 21; ++qb) {
        for (char kind : {'X', 'Y', 'Z'}) {
            PauliOperator e = PauliOperator::single(21, qb, kind);
            auto [sx, sz] = classical_syndrome(q, e);
            auto corr = table.decode(sx, sz);
            REQUIRE(corr.has_value());
            // Correction cancels the error up to a stabilizer element.
            BinaryVector rx = e.x_bits();
            rx.xor_in(corr->x_bits());
            BinaryVector rz = e.z_bits();
            rz.xor_in(corr->z_bits());
            CHECK(q.stabilizer_contains(rx, rz));
        }
    }

    // Any two weight <= 1 errors with equal syndromes differ by a stabilizer.
    std::vector<PauliOperator> errors = {PauliOperator::identity(21)};
    for (int qb = 0; qb < 21; ++qb) {
        for (char kind : {'X', 'Y', 'Z'}) errors.push_back(PauliOperator::single(21, qb, kind));
    }
    for (size_t i = 0; i < errors.size(); ++i) {
        auto [sxi, szi] = classical_syndrome(q, errors[i]);
        for (size_t j = i + 1; j < errors.size(); ++j) {
            auto [sxj, szj] = classical_syndrome(q, errors[j]);
            if (sxi == sxj && szi == szj) {
                BinaryVector rx = errors[i].x_bits();
                rx.xor_in(errors[j].x_bits());
                BinaryVector rz = errors[i].z_bits();
                rz.xor_in(errors[j].z_bits());
                CHECK(q.stabilizer_contains(rx, rz));
            }
        }
    }

    CHECK_THROWS_AS(build_decoder_table(q, 2), std::invalid_argument);  // d = 3 caps t at 1
}

TEST_CASE("decoder table for [[6,2,2]] detects but cannot correct") {
    QuantumCssCode q = build_quantum_rs(2, 3);
    CHECK(default_correction_radius(q) == 0);
    DecoderTable table = build_decoder_table(q, 0);
    CHECK(table.size() == 1);
    for (int qb = 0; qb < 6; ++qb) {
        PauliOperator e = PauliOperator::single(6, qb, 'X');
        auto [sx, sz] = classical_syndrome(q, e);
        if (!sx.is_zero() || !sz.is_zero()) {
            CHECK_FALSE(table.decode(sx, sz).has_value());  // detected-uncorrectable
        }
    }
    CHECK_THROWS_AS(build_decoder_table(q, 1), std::invalid_argument);
}

TEST_CASE("describe_code emits parameters and stabilizer strings") {
    QuantumCssCode q = build_quantum_rs(2, 3);
    const std::string text = describe_code(q);
    CHECK(text.rfind("[[6,2,2]]", 0) == 0);
    CHECK(text.find("X XIIXXX") != std::string::npos);
    CHECK(text.find("Z IZZZZI") != std::string::npos);

    QuantumCssCode q53 = build_quantum_rs(3, 5);
    // Exact distance is known (enumerable dual), so the line is [[21,3,4]].
    const std::string t53 = describe_code(q53);
    CHECK(t53.rfind("[[21,3,", 0) == 0);
}
