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

#include "qrs/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qrs {

BinaryVector BinaryVector::from_string(const std::string& bits) {
    BinaryVector v(static_cast<int>(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(static_cast<int>(i), true);
        else if (bits[i] != '0') throw std::invalid_argument("bit string must be 0/1");
    }
    return v;
}

void BinaryVector::xor_in(const BinaryVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("vector length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

int BinaryVector::weight() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
}

bool BinaryVector::is_zero() const {
    for (uint64_t x : w_) {
        if (x) return false;
    }
    return true;
}

int BinaryVector::dot(const BinaryVector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("vector length mismatch");
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c ^= std::popcount(w_[i] & o.w_[i]) & 1;
    return c;
}

bool BinaryVector::operator<(const BinaryVector& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (int i = 0; i < n_; ++i) {
        const bool a = get(i), b = o.get(i);
        if (a != b) return b;
    }
    return false;
}

std::string BinaryVector::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<BinaryVector>& rows) {
    if (rows.empty()) return BinaryMatrix();
    BinaryMatrix m(static_cast<int>(rows.size()), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BinaryVector> v;
    v.reserve(rows.size());
    for (const auto& s : rows) v.push_back(BinaryVector::from_string(s));
    return from_rows(v);
}

BinaryVector BinaryMatrix::row(int r) const {
    BinaryVector v(cols_);
    for (int c = 0; c < cols_; ++c) v.set(c, get(r, c));
    return v;
}

void BinaryMatrix::set_row(int r, const BinaryVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (int c = 0; c < cols_; ++c) set(r, c, v.get(c));
}

void BinaryMatrix::xor_row_into(int src, int dst) {
    for (int i = 0; i < wpr_; ++i) w_[size_t(dst) * wpr_ + i] ^= w_[size_t(src) * wpr_ + i];
}

void BinaryMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < wpr_; ++i) std::swap(w_[size_t(a) * wpr_ + i], w_[size_t(b) * wpr_ + i]);
}

BinaryMatrix BinaryMatrix::rref(std::vector<int>* pivots) const {
    BinaryMatrix m(*this);
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i) {
            if (m.get(i, c)) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        m.swap_rows(pivot, r);
        for (int i = 0; i < rows_; ++i) {
            if (i != r && m.get(i, c)) m.xor_row_into(r, i);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

int BinaryMatrix::rank() const {
    std::vector<int> pivots;
    rref(&pivots);
    return static_cast<int>(pivots.size());
}

BinaryMatrix BinaryMatrix::row_basis() const {
    std::vector<int> pivots;
    BinaryMatrix m = rref(&pivots);
    BinaryMatrix out(static_cast<int>(pivots.size()), cols_);
    for (size_t i = 0; i < pivots.size(); ++i) out.set_row(static_cast<int>(i), m.row(static_cast<int>(i)));
    return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r, true);
        }
    }
    return t;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    BinaryMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (get(r, c)) out.xor_row_into_external(o, c, r);
        }
    }
    return out;
}

void BinaryMatrix::xor_row_into_external(const BinaryMatrix& src, int src_row, int dst_row) {
    for (int i = 0; i < wpr_; ++i) {
        w_[size_t(dst_row) * wpr_ + i] ^= src.w_[size_t(src_row) * src.wpr_ + i];
    }
}

BinaryVector BinaryMatrix::mul(const BinaryVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
    BinaryVector out(rows_);
    for (int r = 0; r < rows_; ++r) {
        int acc = 0;
        for (size_t i = 0; i < v.words().size(); ++i) {
            acc ^= std::popcount(w_[size_t(r) * wpr_ + i] & v.words()[i]) & 1;
        }
        out.set(r, acc);
    }
    return out;
}

bool BinaryMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (get(r, c) != (r == c)) return false;
        }
    }
    return true;
}

std::optional<BinaryMatrix> BinaryMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    BinaryMatrix a(*this);
    BinaryMatrix inv = identity(rows_);
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int i = c; i < rows_; ++i) {
            if (a.get(i, c)) { pivot = i; break; }
        }
        if (pivot < 0) return std::nullopt;
        a.swap_rows(pivot, c);
        inv.swap_rows(pivot, c);
        for (int i = 0; i < rows_; ++i) {
            if (i != c && a.get(i, c)) {
                a.xor_row_into(c, i);
                inv.xor_row_into(c, i);
            }
        }
    }
    return inv;
}

BinaryMatrix BinaryMatrix::nullspace() const {
    std::vector<int> pivots;
    BinaryMatrix m = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    BinaryMatrix out(static_cast<int>(free_cols.size()), cols_);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        const int fc = free_cols[i];
        out.set(static_cast<int>(i), fc, true);
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (m.get(static_cast<int>(r), fc)) out.set(static_cast<int>(i), pivots[r], true);
        }
    }
    return out;
}

std::optional<BinaryVector> BinaryMatrix::solve(const BinaryVector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    // Eliminate on the augmented matrix [A | b].
    BinaryMatrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
        aug.set(r, cols_, b.get(r));
    }
    std::vector<int> pivots;
    BinaryMatrix m = aug.rref(&pivots);
    BinaryVector x(cols_);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols_) return std::nullopt;  // pivot in the rhs column
        x.set(pivots[i], m.get(static_cast<int>(i), cols_));
    }
    return x;
}

bool BinaryMatrix::in_row_space(const BinaryVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    BinaryMatrix aug = vstack(*this, from_rows({v}));
    return aug.rank() == rank();
}

bool BinaryMatrix::same_row_space(const BinaryMatrix& o) const {
    if (cols_ != o.cols_) return false;
    return row_basis() == o.row_basis();
}

BinaryMatrix BinaryMatrix::vstack(const BinaryMatrix& top, const BinaryMatrix& bottom) {
    if (top.cols_ != bottom.cols_ && top.rows_ != 0 && bottom.rows_ != 0) {
        throw std::invalid_argument("column count mismatch");
    }
    const int cols = top.rows_ ? top.cols_ : bottom.cols_;
    BinaryMatrix out(top.rows_ + bottom.rows_, cols);
    for (int r = 0; r < top.rows_; ++r) out.set_row(r, top.row(r));
    for (int r = 0; r < bottom.rows_; ++r) out.set_row(top.rows_ + r, bottom.row(r));
    return out;
}

std::string BinaryMatrix::to_string() const {
    std::string s;
    for (int r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

FieldMatrix FieldMatrix::identity(const FieldContextPtr& f, int n) {
    FieldMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FieldMatrix::check_field(const FieldMatrix& o) const {
    if (!f_ || !o.f_ || !f_->same_field(*o.f_)) {
        throw std::invalid_argument("field context mismatch");
    }
}

std::vector<uint8_t> FieldMatrix::row(int r) const {
    return std::vector<uint8_t>(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_);
}

void FieldMatrix::set_row(int r, const std::vector<uint8_t>& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + size_t(r) * cols_);
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    check_field(o);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    FieldMatrix out(f_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const uint8_t a = at(r, k);
            if (!a) continue;
            for (int c = 0; c < o.cols_; ++c) {
                out.set(r, c, out.at(r, c) ^ f_->mul(a, o.at(k, c)));
            }
        }
    }
    return out;
}

std::vector<uint8_t> FieldMatrix::mul(const std::vector<uint8_t>& v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw std::invalid_argument("matrix/vector dimension mismatch");
    }
    std::vector<uint8_t> out(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        uint8_t acc = 0;
        for (int c = 0; c < cols_; ++c) acc ^= f_->mul(at(r, c), v[c]);
        out[r] = acc;
    }
    return out;
}

bool FieldMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (at(r, c) != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

FieldMatrix FieldMatrix::rref(std::vector<int>* pivots) const {
    // Binary matrices eliminate word-parallel through the packed form.
    if (f_ && f_->degree() == 1) {
        BinaryMatrix packed(rows_, cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (at(i, j)) packed.set(i, j, true);
            }
        }
        const BinaryMatrix red = packed.rref(pivots);
        FieldMatrix out(f_, rows_, cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) out.set(i, j, red.get(i, j) ? 1 : 0);
        }
        return out;
    }
    FieldMatrix m(*this);
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i) {
            if (m.at(i, c)) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols_; ++j) {
                const uint8_t tmp = m.at(pivot, j);
                m.set(pivot, j, m.at(r, j));
                m.set(r, j, tmp);
            }
        }
        const uint8_t piv_inv = f_->inv(m.at(r, c));
        for (int j = 0; j < cols_; ++j) m.set(r, j, f_->mul(piv_inv, m.at(r, j)));
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const uint8_t factor = m.at(i, c);
            if (!factor) continue;
            for (int j = 0; j < cols_; ++j) {
                m.set(i, j, m.at(i, j) ^ f_->mul(factor, m.at(r, j)));
            }
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

int FieldMatrix::rank() const {
    std::vector<int> pivots;
    rref(&pivots);
    return static_cast<int>(pivots.size());
}

FieldMatrix FieldMatrix::row_basis() const {
    std::vector<int> pivots;
    FieldMatrix m = rref(&pivots);
    FieldMatrix out(f_, static_cast<int>(pivots.size()), cols_);
    for (size_t i = 0; i < pivots.size(); ++i) out.set_row(static_cast<int>(i), m.row(static_cast<int>(i)));
    return out;
}

FieldMatrix FieldMatrix::nullspace() const {
    std::vector<int> pivots;
    FieldMatrix m = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    FieldMatrix out(f_, static_cast<int>(free_cols.size()), cols_);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        const int fc = free_cols[i];
        out.set(static_cast<int>(i), fc, 1);
        // In characteristic 2 the pivot entries equal the RREF column values.
        for (size_t r = 0; r < pivots.size(); ++r) {
            out.set(static_cast<int>(i), pivots[r], m.at(static_cast<int>(r), fc));
        }
    }
    return out;
}

bool FieldMatrix::in_row_space(const std::vector<uint8_t>& v) const {
    FieldMatrix aug(f_, rows_ + 1, cols_);
    for (int r = 0; r < rows_; ++r) aug.set_row(r, row(r));
    aug.set_row(rows_, v);
    return aug.rank() == rank();
}

bool FieldMatrix::same_row_space(const FieldMatrix& o) const {
    check_field(o);
    if (cols_ != o.cols_) return false;
    return row_basis() == o.row_basis();
}

}  // namespace qrs
