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

#include "qrs/codes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qrs {

LinearCode::LinearCode(FieldContextPtr field, int n, const FieldMatrix& rows)
    : f_(std::move(field)), n_(n) {
    if (rows.cols() != n) throw std::invalid_argument("generator width differs from code length");
    if (rows.rows() > 0 && !rows.field()->same_field(*f_)) {
        throw std::invalid_argument("field context mismatch");
    }
    gen_ = rows.rows() > 0 ? rows.row_basis() : FieldMatrix(f_, 0, n);
    k_ = gen_.rows();
}

BinaryMatrix LinearCode::generator_bits() const {
    if (!is_binary()) throw std::logic_error("generator_bits requires a binary code");
    BinaryMatrix m(k_, n_);
    for (int r = 0; r < k_; ++r) {
        for (int c = 0; c < n_; ++c) m.set(r, c, gen_.at(r, c) != 0);
    }
    return m;
}

bool LinearCode::contains(const std::vector<uint8_t>& word) const {
    if (static_cast<int>(word.size()) != n_) throw std::invalid_argument("word length mismatch");
    return gen_.in_row_space(word);
}

bool LinearCode::contains(const BinaryVector& word) const {
    std::vector<uint8_t> w(word.size());
    for (int i = 0; i < word.size(); ++i) w[i] = word.get(i) ? 1 : 0;
    return contains(w);
}

std::optional<uint64_t> LinearCode::codeword_count() const {
    const uint64_t q = f_->size();
    uint64_t count = 1;
    for (int i = 0; i < k_; ++i) {
        if (count > (uint64_t(1) << 62) / q) return std::nullopt;
        count *= q;
    }
    return count;
}

LinearCode reed_solomon(const FieldContextPtr& f, int delta) {
    const int n = f->order();
    // delta > N/2 + 1 guarantees C <= C_dual; delta <= N keeps K >= 1.
    if (2 * delta <= n + 2 || delta > n) {
        throw std::invalid_argument("reed_solomon: delta must satisfy N/2 + 1 < delta <= N (N = " +
                                    std::to_string(n) + ")");
    }
    const int k = n - delta + 1;
    // g(x) = prod_{i=0}^{delta-2} (x - alpha^i), coefficients low degree first.
    std::vector<uint8_t> g = {1};
    for (int i = 0; i <= delta - 2; ++i) {
        const uint8_t root = f->alpha_pow(i);
        std::vector<uint8_t> next(g.size() + 1, 0);
        for (size_t j = 0; j < g.size(); ++j) {
            next[j + 1] ^= g[j];              // x * g
            next[j] ^= f->mul(root, g[j]);    // alpha^i * g  (char 2: minus = plus)
        }
        g = std::move(next);
    }
    FieldMatrix rows(f, k, n);
    for (int r = 0; r < k; ++r) {
        for (size_t j = 0; j < g.size(); ++j) rows.set(r, r + static_cast<int>(j), g[j]);
    }
    LinearCode c(f, n, rows);
    c.designed_distance_ = delta;
    c.gen_poly_ = g;
    return c;
}

LinearCode dual_code(const LinearCode& c) {
    FieldMatrix ns = c.generator().rows() > 0
                         ? c.generator().nullspace()
                         : FieldMatrix::identity(c.field(), c.length());
    return LinearCode(c.field(), c.length(), ns);
}

BinaryVector expand_word(const std::vector<uint8_t>& word, const Basis& b) {
    const int k = b.size();
    BinaryVector out(static_cast<int>(word.size()) * k);
    for (size_t i = 0; i < word.size(); ++i) {
        const std::vector<uint8_t> v = b.coords(word[i]);
        for (int j = 0; j < k; ++j) out.set(static_cast<int>(i) * k + j, v[j] != 0);
    }
    return out;
}

LinearCode binary_expansion(const LinearCode& c, const Basis& b) {
    if (!c.field()->same_field(*b.field())) {
        throw std::invalid_argument("binary_expansion: code and basis over different fields");
    }
    const int k = b.size();
    const int rows = c.dimension() * k;
    FieldMatrix bin(FieldContext::gf2(), rows, c.length() * k);
    int r = 0;
    for (int i = 0; i < c.dimension(); ++i) {
        const std::vector<uint8_t> row = c.generator().row(i);
        for (int l = 0; l < k; ++l) {
            std::vector<uint8_t> scaled(row.size());
            for (size_t j = 0; j < row.size(); ++j) scaled[j] = c.field()->mul(b.element(l), row[j]);
            const BinaryVector e = expand_word(scaled, b);
            for (int j = 0; j < e.size(); ++j) bin.set(r, j, e.get(j) ? 1 : 0);
            ++r;
        }
    }
    LinearCode out(FieldContext::gf2(), c.length() * k, bin);
    if (out.dimension() != rows) throw std::logic_error("binary expansion lost rank");
    return out;
}

bool is_weakly_self_dual(const LinearCode& c) {
    if (c.is_binary()) {
        const BinaryMatrix g = c.generator_bits();
        std::vector<BinaryVector> rows;
        rows.reserve(g.rows());
        for (int i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));
        for (int i = 0; i < g.rows(); ++i) {
            for (int j = i; j < g.rows(); ++j) {
                if (rows[i].dot(rows[j]) != 0) return false;
            }
        }
        return true;
    }
    const FieldMatrix& g = c.generator();
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = i; j < g.rows(); ++j) {
            uint8_t acc = 0;
            for (int t = 0; t < g.cols(); ++t) acc ^= c.field()->mul(g.at(i, t), g.at(j, t));
            if (acc != 0) return false;
        }
    }
    return true;
}

MinDistanceResult min_distance(const LinearCode& c, uint64_t budget) {
    if (c.dimension() == 0) return {0, true};
    const auto count = c.codeword_count();
    if (!count || *count > budget) {
        throw std::length_error("min_distance: codeword count exceeds enumeration budget");
    }
    int best = c.length() + 1;
    c.for_each_codeword([&](const std::vector<uint8_t>& w) {
        int wt = 0;
        for (uint8_t s : w) wt += (s != 0);
        if (wt != 0 && wt < best) best = wt;
    });
    return {best, false};
}

FieldMatrix complement_basis(const LinearCode& sub, const LinearCode& sup) {
    if (!sub.field()->same_field(*sup.field()) || sub.length() != sup.length()) {
        throw std::invalid_argument("codes live in different spaces");
    }
    for (int i = 0; i < sub.dimension(); ++i) {
        if (!sup.generator().in_row_space(sub.generator().row(i))) {
            throw std::invalid_argument("codes are not nested");
        }
    }
    FieldMatrix span = sub.generator();
    std::vector<std::vector<uint8_t>> chosen;
    for (int i = 0; i < sup.dimension(); ++i) {
        const std::vector<uint8_t> row = sup.generator().row(i);
        if (span.in_row_space(row)) continue;
        FieldMatrix next(sub.field(), span.rows() + 1, sub.length());
        for (int r = 0; r < span.rows(); ++r) next.set_row(r, span.row(r));
        next.set_row(span.rows(), row);
        span = next;
        chosen.push_back(row);
    }
    FieldMatrix out(sub.field(), static_cast<int>(chosen.size()), sub.length());
    for (size_t i = 0; i < chosen.size(); ++i) out.set_row(static_cast<int>(i), chosen[i]);
    return out;
}

std::vector<std::vector<uint8_t>> coset_representatives(const LinearCode& sub,
                                                        const LinearCode& sup,
                                                        uint64_t budget) {
    const FieldMatrix comp = complement_basis(sub, sup);
    const int dk = comp.rows();
    const uint64_t q = sub.field()->size();
    uint64_t total = 1;
    for (int i = 0; i < dk; ++i) {
        if (total > budget / q) throw std::length_error("coset count exceeds enumeration budget");
        total *= q;
    }
    std::vector<std::vector<uint8_t>> reps;
    reps.reserve(total);
    for (uint64_t j = 0; j < total; ++j) {
        std::vector<uint8_t> w(sub.length(), 0);
        uint64_t x = j;
        for (int t = 0; t < dk; ++t) {
            const uint8_t digit = static_cast<uint8_t>(x % q);
            x /= q;
            if (digit) {
                for (int c = 0; c < sub.length(); ++c) {
                    w[c] ^= sub.field()->mul(digit, comp.at(t, c));
                }
            }
        }
        reps.push_back(std::move(w));
    }
    return reps;
}

bool verify_duality_diagram(const LinearCode& c, const Basis& b) {
    const LinearCode bc = binary_expansion(c, b);
    const LinearCode lhs = dual_code(bc);
    const LinearCode rhs = binary_expansion(dual_code(c), dual_basis(b));
    return lhs.generator().same_row_space(rhs.generator());
}

std::string write_code(const LinearCode& c) {
    std::ostringstream os;
    if (c.is_binary()) {
        os << "field gf2\n";
    } else {
        os << "field k=" << c.field()->degree() << " modulus=0x" << std::hex
           << c.field()->modulus() << std::dec << "\n";
    }
    os << c.length() << " " << c.dimension() << "\n";
    for (int r = 0; r < c.dimension(); ++r) {
        for (int j = 0; j < c.length(); ++j) {
            if (j) os << " ";
            os << std::hex << static_cast<int>(c.generator().at(r, j)) << std::dec;
        }
        os << "\n";
    }
    return os.str();
}

LinearCode parse_code(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    is >> tag;
    if (tag != "field") throw std::invalid_argument("code file must start with 'field'");
    std::string spec;
    is >> spec;
    FieldContextPtr f;
    if (spec == "gf2") {
        f = FieldContext::gf2();
    } else {
        if (spec.rfind("k=", 0) != 0) throw std::invalid_argument("expected k=<k>");
        const int k = std::stoi(spec.substr(2));
        std::string mod;
        is >> mod;
        if (mod.rfind("modulus=0x", 0) != 0) throw std::invalid_argument("expected modulus=0x<hex>");
        f = make_field(k);
        if (f->modulus() != std::stoul(mod.substr(10), nullptr, 16)) {
            throw std::invalid_argument("unsupported modulus for this degree");
        }
    }
    int n = 0, k_dim = 0;
    if (!(is >> n >> k_dim)) throw std::invalid_argument("expected 'N K' line");
    FieldMatrix rows(f, k_dim, n);
    for (int r = 0; r < k_dim; ++r) {
        for (int c = 0; c < n; ++c) {
            std::string tok;
            if (!(is >> tok)) throw std::invalid_argument("truncated generator matrix");
            const unsigned long v = std::stoul(tok, nullptr, 16);
            if (v >= static_cast<unsigned long>(f->size())) {
                throw std::invalid_argument("symbol out of field range");
            }
            rows.set(r, c, static_cast<uint8_t>(v));
        }
    }
    return LinearCode(f, n, rows);
}

}  // namespace qrs
