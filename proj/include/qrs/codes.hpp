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
#include <vector>

#include "qrs/galois.hpp"
#include "qrs/linalg.hpp"

namespace qrs {

/// A linear code over GF(2^k), including the binary field (k = 1).
/// The generator matrix is kept in reduced row echelon form, so two codes
/// with the same row space compare equal.
class LinearCode {
public:
    /// Builds the code spanned by the given rows (need not be independent).
    LinearCode(FieldContextPtr field, int n, const FieldMatrix& rows);

    const FieldContextPtr& field() const { return f_; }
    bool is_binary() const { return f_->degree() == 1; }
    int length() const { return n_; }
    int dimension() const { return k_; }
    const FieldMatrix& generator() const { return gen_; }
    /// Generator as a packed bit matrix; only for binary codes.
    BinaryMatrix generator_bits() const;

    std::optional<int> designed_distance() const { return designed_distance_; }
    /// Low-degree-first coefficients of g(x); present for Reed-Solomon codes.
    const std::optional<std::vector<uint8_t>>& generator_polynomial() const { return gen_poly_; }

    bool contains(const std::vector<uint8_t>& word) const;
    bool contains(const BinaryVector& word) const;
    /// Number of codewords q^K, or nullopt if it overflows 2^63.
    std::optional<uint64_t> codeword_count() const;

    bool operator==(const LinearCode& o) const {
        return f_->same_field(*o.f_) && n_ == o.n_ && gen_ == o.gen_;
    }

    /// Visits every codeword exactly once (the zero word included).
    /// The visitation order is deterministic: message digits counted in base
    /// q with digit t scaling generator row t.
    template <class Fn>
    void for_each_codeword(Fn&& fn) const;

private:
    friend LinearCode reed_solomon(const FieldContextPtr&, int);
    FieldContextPtr f_;
    int n_;
    int k_;
    FieldMatrix gen_;
    std::optional<int> designed_distance_;
    std::optional<std::vector<uint8_t>> gen_poly_;
};

/// The Reed-Solomon code of length N = 2^k - 1 with generator polynomial
/// g(x) = prod_{i=0}^{delta-2} (x - alpha^i) and dimension K = N - delta + 1.
/// Requires N/2 + 1 < delta <= N so that 1 <= K < N/2 and the code is
/// contained in its dual.
LinearCode reed_solomon(const FieldContextPtr& f, int delta);

/// Euclidean dual: the [N, N-K] code orthogonal to every codeword.
LinearCode dual_code(const LinearCode& c);

/// Binary expansion with respect to basis B: the [kN, kK] binary code whose
/// codewords are the symbol-major coordinate expansions of codewords of C.
LinearCode binary_expansion(const LinearCode& c, const Basis& b);

/// Symbol-major coordinate expansion of a single word.
BinaryVector expand_word(const std::vector<uint8_t>& word, const Basis& b);

/// True iff G * G^T = 0, i.e. C is contained in its Euclidean dual.
bool is_weakly_self_dual(const LinearCode& c);

struct MinDistanceResult {
    int value = 0;
    bool zero_code = false;
};

inline constexpr uint64_t kEnumerationBudget = uint64_t(1) << 24;

/// Exact minimum Hamming weight by exhaustive enumeration. Throws a
/// std::length_error when the codeword count exceeds the budget.
MinDistanceResult min_distance(const LinearCode& c, uint64_t budget = kEnumerationBudget);

/// A deterministic basis of a complement of sub inside sup: rows of sup's
/// reduced generator that are independent of sub, in row-echelon order.
/// Throws std::invalid_argument when sub is not contained in sup.
FieldMatrix complement_basis(const LinearCode& sub, const LinearCode& sup);

/// A full system of coset representatives of sup/sub, zero vector first,
/// generated from the complement basis by base-q counting (digit t of the
/// coset index scales complement row t).
std::vector<std::vector<uint8_t>> coset_representatives(const LinearCode& sub,
                                                        const LinearCode& sup,
                                                        uint64_t budget = kEnumerationBudget);

/// Executable form of the duality theorem: the dual of the binary expansion
/// of C under B equals the binary expansion of the dual code under the dual
/// basis.
bool verify_duality_diagram(const LinearCode& c, const Basis& b);

/// Plain-text matrix format: header `field gf2` or
/// `field k=<k> modulus=0x<hex>`, then `N K`, then K rows of N hex symbols.
std::string write_code(const LinearCode& c);
LinearCode parse_code(const std::string& text);

template <class Fn>
void LinearCode::for_each_codeword(Fn&& fn) const {
    const int q = f_->size();
    const int n = n_;
    std::vector<uint8_t> word(n, 0);
    if (k_ == 0) {
        fn(word);
        return;
    }
    // scaled[t][s] = s * row_t, so digit changes are single XOR updates.
    std::vector<std::vector<uint8_t>> scaled(size_t(k_) * q);
    for (int t = 0; t < k_; ++t) {
        for (int s = 0; s < q; ++s) {
            std::vector<uint8_t> rs(n);
            for (int j = 0; j < n; ++j) rs[j] = f_->mul(uint8_t(s), gen_.at(t, j));
            scaled[size_t(t) * q + s] = std::move(rs);
        }
    }
    std::vector<int> digits(k_, 0);
    for (;;) {
        fn(word);
        int t = 0;
        while (t < k_) {
            const int old = digits[t];
            const int next = (old + 1) % q;
            digits[t] = next;
            const uint8_t delta = uint8_t(old ^ next);
            const std::vector<uint8_t>& upd = scaled[size_t(t) * q + delta];
            for (int j = 0; j < n; ++j) word[j] ^= upd[j];
            if (next != 0) break;
            ++t;
        }
        if (t == k_) return;
    }
}

}  // namespace qrs
