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

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qrs {

unsigned FieldContext::polymul_f2(unsigned a, unsigned b) {
    unsigned r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

int FieldContext::poly_degree(unsigned a) {
    int d = -1;
    while (a) {
        ++d;
        a >>= 1;
    }
    return d;
}

unsigned FieldContext::polymod_f2(unsigned a, unsigned m) {
    const int dm = poly_degree(m);
    int da = poly_degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

bool FieldContext::is_irreducible(unsigned m) {
    const int d = poly_degree(m);
    if (d < 1) return false;
    // Trial division by every polynomial of degree 1..d/2.
    for (int dd = 1; dd <= d / 2; ++dd) {
        for (unsigned q = 1u << dd; q < (2u << dd); ++q) {
            if (polymod_f2(m, q) == 0) return false;
        }
    }
    return true;
}

namespace {

// Multiplicative order of x modulo m (m irreducible of degree k >= 2).
int order_of_x(unsigned m, int k) {
    const int n = (1 << k) - 1;
    unsigned p = 1;
    for (int e = 1; e <= n; ++e) {
        p = FieldContext::polymod_f2(p << 1, m);  // multiply by x
        if (p == 1) return e;
    }
    return 0;
}

}  // namespace

FieldContext::FieldContext(int k, unsigned modulus)
    : k_(k), n_((1 << k) - 1), modulus_(modulus), alpha_(k == 1 ? 1 : 2) {
    // Discrete log tables from successive multiplication by alpha.
    unsigned cur = 1;
    std::fill(log_.begin(), log_.end(), -1);
    for (int i = 0; i < n_; ++i) {
        exp_[i] = static_cast<uint8_t>(cur);
        log_[cur] = static_cast<int16_t>(i);
        cur = polymod_f2(polymul_f2(cur, alpha_), modulus_);
    }
    // Trace table: Tr(a) = a + a^2 + ... + a^{2^{k-1}} lies in {0, 1}.
    for (int a = 0; a < (1 << k); ++a) {
        unsigned acc = 0;
        unsigned p = static_cast<unsigned>(a);
        for (int j = 0; j < k; ++j) {
            acc ^= p;
            p = polymod_f2(polymul_f2(p, p), modulus_);
        }
        if (acc > 1) throw std::logic_error("trace not in F_2");
        trace_[a] = static_cast<uint8_t>(acc);
    }
}

FieldContextPtr FieldContext::make(int k) {
    if (k < 2 || k > 8) {
        throw std::invalid_argument("make_field: extension degree must be in [2, 8], got " +
                                    std::to_string(k));
    }
    const int n = (1 << k) - 1;
    // Smallest irreducible modulus (ascending integer order = lexicographic
    // on coefficient vectors) for which x is primitive.
    for (unsigned m = (1u << k) + 1; m < (2u << k); m += 2) {
        if (!is_irreducible(m)) continue;
        if (order_of_x(m, k) != n) continue;
        return FieldContextPtr(new FieldContext(k, m));
    }
    throw std::logic_error("no primitive modulus found");  // unreachable for k in range
}

FieldContextPtr FieldContext::gf2() {
    static const FieldContextPtr ctx(new FieldContext(1, 0b11));  // modulus x + 1
    return ctx;
}

uint8_t FieldContext::mul(uint8_t a, uint8_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % n_];
}

uint8_t FieldContext::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(2^k)");
    return exp_[(n_ - log_[a]) % n_];
}

uint8_t FieldContext::alpha_pow(int e) const {
    int r = e % n_;
    if (r < 0) r += n_;
    return exp_[r];
}

int FieldContext::log_alpha(uint8_t a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (f_ == nullptr || o.f_ == nullptr || !f_->same_field(*o.f_)) {
        throw std::invalid_argument("field context mismatch");
    }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    return FieldElement(static_cast<uint8_t>(v_ ^ o.v_), f_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    return FieldElement(f_->mul(v_, o.v_), f_);
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(o);
    return v_ == o.v_;
}

FieldElement FieldElement::inverse() const {
    return FieldElement(f_->inv(v_), f_);
}

FieldElement FieldElement::pow(int e) const {
    if (v_ == 0) {
        if (e <= 0) throw std::domain_error("0^e undefined for e <= 0");
        return *this;
    }
    const int n = f_->order();
    long ee = static_cast<long>(f_->log_alpha(v_)) * e;
    return FieldElement(f_->alpha_pow(static_cast<int>(ee % n)), f_);
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    os << "0x" << std::hex << static_cast<int>(v_);
    return os.str();
}

namespace {

// Gaussian inverse of a k x k bit matrix given as row-major bytes.
// Returns empty vector when singular.
std::vector<uint8_t> invert_bit_matrix(const std::vector<uint8_t>& m, int k) {
    std::vector<uint8_t> a(m);
    std::vector<uint8_t> inv(k * k, 0);
    for (int i = 0; i < k; ++i) inv[i * k + i] = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r) {
            if (a[r * k + col]) { pivot = r; break; }
        }
        if (pivot < 0) return {};
        if (pivot != col) {
            for (int c = 0; c < k; ++c) {
                std::swap(a[pivot * k + c], a[col * k + c]);
                std::swap(inv[pivot * k + c], inv[col * k + c]);
            }
        }
        for (int r = 0; r < k; ++r) {
            if (r != col && a[r * k + col]) {
                for (int c = 0; c < k; ++c) {
                    a[r * k + c] ^= a[col * k + c];
                    inv[r * k + c] ^= inv[col * k + c];
                }
            }
        }
    }
    return inv;
}

}  // namespace

Basis::Basis(FieldContextPtr field, std::vector<uint8_t> elements)
    : f_(std::move(field)), elems_(std::move(elements)) {
    const int k = f_->degree();
    if (static_cast<int>(elems_.size()) != k) {
        throw std::invalid_argument("basis must have exactly k elements");
    }
    // Coordinate matrix: column j holds the polynomial coordinates of b_j.
    std::vector<uint8_t> coord(k * k, 0);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) coord[i * k + j] = (elems_[j] >> i) & 1u;
    }
    coord_inv_ = invert_bit_matrix(coord, k);
    if (coord_inv_.empty()) {
        throw std::invalid_argument("elements are linearly dependent, not a basis");
    }
    gram_.assign(k * k, 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            gram_[i * k + j] = static_cast<uint8_t>(f_->trace(f_->mul(elems_[i], elems_[j])));
        }
    }
}

bool Basis::is_self_dual() const {
    const int k = size();
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (gram_[i * k + j] != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

std::vector<uint8_t> Basis::coords(uint8_t a) const {
    const int k = size();
    std::vector<uint8_t> v(k, 0);
    for (int i = 0; i < k; ++i) {
        uint8_t acc = 0;
        for (int j = 0; j < k; ++j) acc ^= coord_inv_[i * k + j] & ((a >> j) & 1u);
        v[i] = acc;
    }
    return v;
}

uint8_t Basis::from_coords(const std::vector<uint8_t>& v) const {
    if (static_cast<int>(v.size()) != size()) {
        throw std::invalid_argument("coordinate vector has wrong length");
    }
    uint8_t a = 0;
    for (int j = 0; j < size(); ++j) {
        if (v[j] & 1u) a ^= elems_[j];
    }
    return a;
}

Basis dual_basis(const Basis& b) {
    const FieldContextPtr& f = b.field();
    const int k = f->degree();
    // T[i][m] = Tr(b_i * x^m); dual element d_j has polynomial coordinates
    // given by column j of T^{-1}, since Tr(b_i * d_j) = (T * C)_{ij}.
    std::vector<uint8_t> t(k * k, 0);
    for (int i = 0; i < k; ++i) {
        for (int m = 0; m < k; ++m) {
            t[i * k + m] = static_cast<uint8_t>(f->trace(f->mul(b.element(i), uint8_t(1u << m))));
        }
    }
    std::vector<uint8_t> tinv = invert_bit_matrix(t, k);
    if (tinv.empty()) throw std::invalid_argument("trace form degenerate: not a basis");
    std::vector<uint8_t> duals(k, 0);
    for (int j = 0; j < k; ++j) {
        uint8_t d = 0;
        for (int m = 0; m < k; ++m) {
            if (tinv[m * k + j]) d ^= static_cast<uint8_t>(1u << m);
        }
        duals[j] = d;
    }
    return Basis(b.field(), duals);
}

namespace {

// Incremental F_2 independence tracking for the self-dual search: keeps a
// reduced spanning set of the chosen elements.
struct SpanTracker {
    std::vector<uint8_t> reduced;
    bool try_add(uint8_t v) {
        uint8_t r = v;
        bool changed = true;
        while (changed && r != 0) {
            changed = false;
            for (uint8_t p : reduced) {
                if (r != 0 && FieldContext::poly_degree(p) == FieldContext::poly_degree(r)) {
                    r ^= p;
                    changed = true;
                }
            }
        }
        if (r == 0) return false;
        reduced.push_back(r);
        return true;
    }
    void pop() { reduced.pop_back(); }
};

bool self_dual_search(const FieldContext& f, const std::vector<uint8_t>& candidates,
                      size_t start, std::vector<uint8_t>& chosen, SpanTracker& span, int k) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (size_t i = start; i < candidates.size(); ++i) {
        const uint8_t c = candidates[i];
        bool ok = true;
        for (uint8_t b : chosen) {
            if (f.trace(f.mul(b, c)) != 0) { ok = false; break; }
        }
        if (!ok) continue;
        if (!span.try_add(c)) continue;
        chosen.push_back(c);
        if (self_dual_search(f, candidates, i + 1, chosen, span, k)) return true;
        chosen.pop_back();
        span.pop();
    }
    return false;
}

}  // namespace

Basis find_self_dual_basis(const FieldContextPtr& f) {
    const int k = f->degree();
    // Diagonal Gram condition: Tr(b_i^2) = Tr(b_i) = 1.
    std::vector<uint8_t> candidates;
    for (int a = 1; a < f->size(); ++a) {
        if (f->trace(static_cast<uint8_t>(a)) == 1) candidates.push_back(static_cast<uint8_t>(a));
    }
    std::vector<uint8_t> chosen;
    SpanTracker span;
    if (!self_dual_search(*f, candidates, 0, chosen, span, k)) {
        throw std::logic_error("no self-dual basis found");  // cannot happen in char 2
    }
    return Basis(f, chosen);
}

}  // namespace qrs
