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

#include "qrs/galois.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace qrs;

namespace {

// Test-side polynomial oracle, independent of FieldContext's tables:
// schoolbook carry-less multiply and long division.
unsigned oracle_polymul(unsigned a, unsigned b) {
    unsigned r = 0;
    for (int i = 0; i < 16; ++i) {
        if ((b >> i) & 1u) r ^= a << i;
    }
    return r;
}

int oracle_degree(unsigned a) {
    int d = -1;
    while (a) { ++d; a >>= 1; }
    return d;
}

unsigned oracle_polymod(unsigned a, unsigned m) {
    while (oracle_degree(a) >= oracle_degree(m)) {
        a ^= m << (oracle_degree(a) - oracle_degree(m));
    }
    return a;
}

// Irreducibility by exhausting all factorizations into lower-degree products.
bool oracle_irreducible(unsigned m) {
    const int d = oracle_degree(m);
    for (int da = 1; da < d; ++da) {
        for (unsigned a = 1u << da; a < (2u << da); ++a) {
            const int db = d - da;
            for (unsigned b = 1u << db; b < (2u << db); ++b) {
                if (oracle_polymul(a, b) == m) return false;
            }
        }
    }
    return true;
}

// Field multiplication straight from the definition (no tables).
uint8_t oracle_mul(uint8_t a, uint8_t b, unsigned modulus) {
    return static_cast<uint8_t>(oracle_polymod(oracle_polymul(a, b), modulus));
}

uint8_t oracle_pow(uint8_t a, int e, unsigned modulus) {
    uint8_t r = 1;
    for (int i = 0; i < e; ++i) r = oracle_mul(r, a, modulus);
    return r;
}

uint8_t oracle_trace(uint8_t a, int k, unsigned modulus) {
    uint8_t acc = 0;
    uint8_t p = a;
    for (int i = 0; i < k; ++i) {
        acc ^= p;
        p = oracle_mul(p, p, modulus);
    }
    return acc;
}

}  // namespace

TEST_CASE("make_field picks the smallest irreducible primitive modulus") {
    // k=2: the single degree-2 irreducible is x^2+x+1.
    auto f2 = make_field(2);
    CHECK(f2->modulus() == 0b111u);
    CHECK(f2->alpha() == 2);
    // k=3: x^3+x+1.
    auto f3 = make_field(3);
    CHECK(f3->modulus() == 0b1011u);

    // Oracle sweep: for each k, no smaller irreducible modulus has primitive x.
    for (int k = 2; k <= 8; ++k) {
        auto f = make_field(k);
        const unsigned m = f->modulus();
        CHECK(oracle_irreducible(m));
        const int n = (1 << k) - 1;
        // x reaches 1 exactly at exponent N.
        for (int e = 1; e < n; ++e) CHECK(oracle_pow(2, e, m) != 1);
        CHECK(oracle_pow(2, n, m) == 1);
        for (unsigned cand = (1u << k) + 1; cand < m; cand += 2) {
            if (!oracle_irreducible(cand)) continue;
            bool primitive = true;
            for (int e = 1; e < n; ++e) {
                if (oracle_pow(2, e, cand) == 1) { primitive = false; break; }
            }
            CHECK_FALSE(primitive);
        }
        // Determinism.
        CHECK(make_field(k)->modulus() == m);
    }
}

TEST_CASE("make_field rejects out-of-range degrees") {
    CHECK_THROWS_AS(make_field(1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(9), std::invalid_argument);
}

TEST_CASE("GF(4) multiplication and inverses") {
    auto f = make_field(2);
    const FieldElement zero(0, f), one(1, f), w(2, f), w2(3, f);
    CHECK(w * w2 == one);      // w * w^2 = w^3 = 1
    CHECK(w * one == w);
    CHECK(w * zero == zero);
    CHECK(w * w == w2);        // x^2 = x+1 mod x^2+x+1
    CHECK(w.inverse() == w2);
    CHECK(one.inverse() == one);
    CHECK_THROWS_AS(zero.inverse(), std::domain_error);
}

TEST_CASE("context mismatch is rejected") {
    auto f4 = make_field(2);
    auto f8 = make_field(3);
    FieldElement a(2, f4), b(2, f8);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for small k") {
    for (int k = 2; k <= 4; ++k) {
        auto f = make_field(k);
        const int q = f->size();
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->mul(a, b) == oracle_mul(a, b, f->modulus()));
                for (int c = 0; c < q; ++c) {
                    CHECK(f->mul(a, uint8_t(b ^ c)) == (f->mul(a, b) ^ f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("Lagrange: a^(2^k-1) = 1 for all nonzero a, k up to 8") {
    for (int k = 2; k <= 8; ++k) {
        auto f = make_field(k);
        for (int a = 1; a < f->size(); ++a) {
            CHECK(FieldElement(uint8_t(a), f).pow(f->order()).value() == 1);
        }
    }
}

TEST_CASE("trace values and properties") {
    auto f = make_field(2);
    CHECK(f->trace(2) == 1);  // Tr(w) = w + w^2 = 1
    CHECK(f->trace(1) == 0);  // 1 + 1 = 0
    CHECK(f->trace(0) == 0);

    for (int k = 2; k <= 8; ++k) {
        auto fk = make_field(k);
        for (int a = 0; a < fk->size(); ++a) {
            CHECK(fk->trace(a) == oracle_trace(uint8_t(a), k, fk->modulus()));
            // Frobenius invariance.
            CHECK(fk->trace(fk->mul(a, a)) == fk->trace(a));
            // F_2-linearity.
            for (int b = 0; b < fk->size(); ++b) {
                CHECK(fk->trace(a ^ b) == (fk->trace(a) ^ fk->trace(b)));
            }
        }
    }
}

TEST_CASE("dual basis solves the trace biorthogonality system") {
    auto f = make_field(2);

    SUBCASE("(w, w^2) is self-dual") {
        Basis b(f, {2, 3});
        CHECK(b.is_self_dual());
        Basis d = dual_basis(b);
        CHECK(d == b);
    }

    SUBCASE("dual of (1, w) from the 2x2 trace system") {
        Basis b(f, {1, 2});
        Basis d = dual_basis(b);
        // Oracle: Tr(b_i * d_j) = delta_ij, checked from the trace table.
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                CHECK(f->trace(f->mul(b.element(i), d.element(j))) == (i == j ? 1 : 0));
            }
        }
        // The solution is unique: (w^2, 1).
        CHECK(d.element(0) == 3);
        CHECK(d.element(1) == 1);
    }

    SUBCASE("involution on every basis of GF(8)") {
        auto f8 = make_field(3);
        int bases_checked = 0;
        for (int a = 1; a < 8; ++a) {
            for (int b = 1; b < 8; ++b) {
                for (int c = 1; c < 8; ++c) {
                    std::vector<uint8_t> elems = {uint8_t(a), uint8_t(b), uint8_t(c)};
                    try {
                        Basis bb(f8, elems);
                        CHECK(dual_basis(dual_basis(bb)) == bb);
                        ++bases_checked;
                    } catch (const std::invalid_argument&) {
                        // dependent triple, not a basis
                    }
                }
            }
        }
        CHECK(bases_checked == 168);  // |GL(3,2)| = 168 ordered bases
    }

    SUBCASE("dependent list is rejected") {
        CHECK_THROWS_AS(Basis(f, {1, 1}), std::invalid_argument);
        auto f8 = make_field(3);
        CHECK_THROWS_AS(Basis(f8, {1, 2, 3}), std::invalid_argument);  // 3 = 1 ^ 2
    }
}

TEST_CASE("biorthogonality of dual pairs across random bases") {
    for (int k = 2; k <= 5; ++k) {
        auto f = make_field(k);
        // Deterministic sweep over a few bases built from shifted powers.
        for (int shift = 0; shift < 5; ++shift) {
            std::vector<uint8_t> elems;
            for (int j = 0; j < k; ++j) elems.push_back(f->alpha_pow(shift + j));
            try {
                Basis b(f, elems);
                Basis d = dual_basis(b);
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j) {
                        CHECK(f->trace(f->mul(b.element(i), d.element(j))) == (i == j ? 1 : 0));
                    }
                }
            } catch (const std::invalid_argument&) {
            }
        }
    }
}

TEST_CASE("find_self_dual_basis returns Gram = I for every supported degree") {
    for (int k = 2; k <= 8; ++k) {
        auto f = make_field(k);
        Basis b = find_self_dual_basis(f);
        CHECK(b.size() == k);
        CHECK(b.is_self_dual());
        // Deterministic.
        CHECK(find_self_dual_basis(f) == b);
    }
}

TEST_CASE("GF(4) self-dual basis is (w, w^2)") {
    auto f = make_field(2);
    Basis b = find_self_dual_basis(f);
    CHECK(b.element(0) == 2);
    CHECK(b.element(1) == 3);
}

TEST_CASE("the GF(8) triple (a^3, a^5, a^6) is self-dual") {
    // Trace oracle: Tr(a^3) = Tr(a^5) = Tr(a^6) = 1 and the pairwise
    // products a^8, a^9, a^11 all have trace 0.
    auto f = make_field(3);
    CHECK(f->trace(f->alpha_pow(3)) == 1);
    CHECK(f->trace(f->alpha_pow(5)) == 1);
    CHECK(f->trace(f->alpha_pow(6)) == 1);
    CHECK(f->trace(f->alpha_pow(8)) == 0);
    CHECK(f->trace(f->alpha_pow(9)) == 0);
    CHECK(f->trace(f->alpha_pow(11)) == 0);
    Basis b(f, {f->alpha_pow(3), f->alpha_pow(5), f->alpha_pow(6)});
    CHECK(b.is_self_dual());
}

TEST_CASE("coords round-trips through every basis element combination") {
    auto f = make_field(2);
    Basis b(f, {2, 3});  // (w, w^2)
    CHECK(b.coords(1) == std::vector<uint8_t>{1, 1});  // 1 = w + w^2
    CHECK(b.coords(2) == std::vector<uint8_t>{1, 0});
    CHECK(b.coords(0) == std::vector<uint8_t>{0, 0});
    CHECK_THROWS_AS(b.from_coords({1}), std::invalid_argument);

    for (int k = 2; k <= 5; ++k) {
        auto fk = make_field(k);
        Basis sd = find_self_dual_basis(fk);
        std::set<std::vector<uint8_t>> seen;
        for (int a = 0; a < fk->size(); ++a) {
            auto v = sd.coords(uint8_t(a));
            CHECK(sd.from_coords(v) == a);
            seen.insert(v);
            // Linearity in a.
            for (int c = 0; c < fk->size(); ++c) {
                auto va = sd.coords(uint8_t(a));
                auto vc = sd.coords(uint8_t(c));
                auto vs = sd.coords(uint8_t(a ^ c));
                for (int j = 0; j < k; ++j) CHECK(vs[j] == (va[j] ^ vc[j]));
            }
        }
        CHECK(seen.size() == size_t(fk->size()));  // bijection
    }
}

TEST_CASE("gf2 context behaves as the binary field") {
    auto f = FieldContext::gf2();
    CHECK(f->degree() == 1);
    CHECK(f->mul(1, 1) == 1);
    CHECK(f->mul(1, 0) == 0);
    CHECK(f->inv(1) == 1);
    CHECK(f->trace(1) == 1);
}
