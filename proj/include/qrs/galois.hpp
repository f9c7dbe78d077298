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

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qrs {

class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// GF(2^k) with an explicit irreducible modulus polynomial and alpha = x as
/// primitive element. Elements are k-bit coefficient vectors over the
/// polynomial basis {1, x, ..., x^{k-1}}; bit i is the coefficient of x^i.
/// Immutable after construction and safe to share between threads.
class FieldContext {
public:
    /// Builds GF(2^k), 2 <= k <= 8. The modulus is the lexicographically
    /// smallest irreducible polynomial of degree k for which x is primitive,
    /// so the context is deterministic for fixed k.
    static FieldContextPtr make(int k);

    /// The binary field F_2 (k = 1). Used internally to represent binary
    /// codes with the same machinery as codes over extension fields.
    static FieldContextPtr gf2();

    int degree() const { return k_; }
    unsigned modulus() const { return modulus_; }
    /// Multiplicative group order N = 2^k - 1.
    int order() const { return n_; }
    int size() const { return 1 << k_; }
    uint8_t alpha() const { return alpha_; }

    uint8_t add(uint8_t a, uint8_t b) const { return a ^ b; }
    uint8_t mul(uint8_t a, uint8_t b) const;
    uint8_t inv(uint8_t a) const;
    /// alpha^e; e may be negative, exponents are taken mod N.
    uint8_t alpha_pow(int e) const;
    /// Discrete log base alpha; a must be nonzero.
    int log_alpha(uint8_t a) const;
    /// Tr(a) = a + a^2 + ... + a^{2^{k-1}}, returned as 0 or 1.
    int trace(uint8_t a) const { return trace_[a]; }

    /// Same field = same degree and same modulus. Two independently created
    /// contexts for the same field are interchangeable.
    bool same_field(const FieldContext& other) const {
        return k_ == other.k_ && modulus_ == other.modulus_;
    }

    // Polynomial helpers over F_2 (coefficient-packed integers), exposed for
    // reuse by tests and by the modulus search itself.
    static unsigned polymul_f2(unsigned a, unsigned b);
    static unsigned polymod_f2(unsigned a, unsigned m);
    static int poly_degree(unsigned a);
    static bool is_irreducible(unsigned m);

private:
    FieldContext(int k, unsigned modulus);

    int k_;
    int n_;
    unsigned modulus_;
    uint8_t alpha_;
    std::array<uint8_t, 256> exp_{};
    std::array<int16_t, 256> log_{};
    std::array<uint8_t, 256> trace_{};
};

/// make_field(k): public constructor for GF(2^k) per the toolkit contract.
inline FieldContextPtr make_field(int k) { return FieldContext::make(k); }

/// A value of GF(2^k) bound to its context. Addition is XOR; multiplication
/// goes through the context's log/antilog tables.
class FieldElement {
public:
    FieldElement() : v_(0), f_(nullptr) {}
    FieldElement(uint8_t value, const FieldContext* f) : v_(value), f_(f) {}
    FieldElement(uint8_t value, const FieldContextPtr& f) : v_(value), f_(f.get()) {}

    uint8_t value() const { return v_; }
    const FieldContext* field() const { return f_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Multiplicative inverse, computed as a^{2^k-2}; throws on zero.
    FieldElement inverse() const;
    FieldElement pow(int e) const;
    int trace() const { return f_->trace(v_); }

    std::string to_string() const;

private:
    void check_same_field(const FieldElement& o) const;
    uint8_t v_;
    const FieldContext* f_;
};

/// An ordered F_2-basis (b_1, ..., b_k) of GF(2^k) together with its Gram
/// matrix Gram(i,j) = Tr(b_i * b_j). Self-dual iff Gram is the identity.
class Basis {
public:
    Basis(FieldContextPtr field, std::vector<uint8_t> elements);

    const FieldContextPtr& field() const { return f_; }
    int size() const { return static_cast<int>(elems_.size()); }
    uint8_t element(int i) const { return elems_[i]; }
    FieldElement element_of(int i) const { return FieldElement(elems_[i], f_); }
    const std::vector<uint8_t>& elements() const { return elems_; }

    /// Gram matrix entry Tr(b_i * b_j).
    int gram(int i, int j) const { return gram_[i * size() + j]; }
    bool is_self_dual() const;

    /// Coordinates of a in this basis: a = sum_j v[j] * b_j.
    std::vector<uint8_t> coords(uint8_t a) const;
    uint8_t from_coords(const std::vector<uint8_t>& v) const;

    bool operator==(const Basis& o) const {
        return f_->same_field(*o.f_) && elems_ == o.elems_;
    }

private:
    FieldContextPtr f_;
    std::vector<uint8_t> elems_;
    std::vector<uint8_t> gram_;
    // Inverse of the k x k coordinate matrix whose columns are the
    // polynomial-basis coordinates of the b_j; row-major bits.
    std::vector<uint8_t> coord_inv_;
};

/// The unique dual basis B' with Tr(b_i * b'_j) = delta_ij.
Basis dual_basis(const Basis& b);

/// First self-dual basis in a fixed enumeration order (elements ascending by
/// integer representation, backtracking over trace-orthogonal candidates).
/// Deterministic for every supported k.
Basis find_self_dual_basis(const FieldContextPtr& f);

}  // namespace qrs
