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

namespace qrs {

/// Dense F_2 vector, bit-packed into 64-bit words.
class BinaryVector {
public:
    BinaryVector() : n_(0) {}
    explicit BinaryVector(int n) : n_(n), w_((n + 63) / 64, 0) {}
    static BinaryVector from_string(const std::string& bits);

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        const uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_in(const BinaryVector& o);
    int weight() const;
    bool is_zero() const;
    /// Parity of the overlap <a, b> over F_2.
    int dot(const BinaryVector& o) const;

    bool operator==(const BinaryVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BinaryVector& o) const { return !(*this == o); }
    bool operator<(const BinaryVector& o) const;

    std::string to_string() const;

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int n_;
    std::vector<uint64_t> w_;
};

/// Dense F_2 matrix with bit-packed rows. Rank, reduced row echelon form,
/// inverses and nullspaces via Gaussian elimination.
class BinaryMatrix {
public:
    BinaryMatrix() : rows_(0), cols_(0), wpr_(0) {}
    BinaryMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(size_t(rows) * wpr_, 0) {}
    static BinaryMatrix identity(int n);
    static BinaryMatrix from_rows(const std::vector<BinaryVector>& rows);
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return (w_[size_t(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v) {
        const uint64_t m = uint64_t(1) << (c & 63);
        if (v) w_[size_t(r) * wpr_ + (c >> 6)] |= m;
        else w_[size_t(r) * wpr_ + (c >> 6)] &= ~m;
    }

    BinaryVector row(int r) const;
    void set_row(int r, const BinaryVector& v);
    void xor_row_into(int src, int dst);
    void swap_rows(int a, int b);

    bool operator==(const BinaryMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

    int rank() const;
    /// Reduced row echelon form; zero rows are kept at the bottom. Pivot
    /// column indices are appended to *pivots when given.
    BinaryMatrix rref(std::vector<int>* pivots = nullptr) const;
    /// RREF with zero rows removed: the canonical generator of the row space.
    BinaryMatrix row_basis() const;

    BinaryMatrix transpose() const;
    BinaryMatrix operator*(const BinaryMatrix& o) const;
    BinaryVector mul(const BinaryVector& v) const;
    bool is_identity() const;

    std::optional<BinaryMatrix> inverse() const;
    /// Rows span the solution space of A x = 0.
    BinaryMatrix nullspace() const;
    /// One solution of A x = b with free variables fixed to zero
    /// (deterministic), or nullopt when inconsistent.
    std::optional<BinaryVector> solve(const BinaryVector& b) const;

    bool in_row_space(const BinaryVector& v) const;
    bool same_row_space(const BinaryMatrix& o) const;
    /// Stacks the rows of two matrices with equal column counts.
    static BinaryMatrix vstack(const BinaryMatrix& top, const BinaryMatrix& bottom);

    std::string to_string() const;

private:
    void xor_row_into_external(const BinaryMatrix& src, int src_row, int dst_row);
    int rows_, cols_, wpr_;
    std::vector<uint64_t> w_;
};

/// Dense matrix over GF(2^k) bound to a field context.
class FieldMatrix {
public:
    FieldMatrix() : rows_(0), cols_(0) {}
    FieldMatrix(FieldContextPtr f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}
    static FieldMatrix identity(const FieldContextPtr& f, int n);

    const FieldContextPtr& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint8_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    void set(int r, int c, uint8_t v) { a_[size_t(r) * cols_ + c] = v; }

    std::vector<uint8_t> row(int r) const;
    void set_row(int r, const std::vector<uint8_t>& v);

    FieldMatrix operator*(const FieldMatrix& o) const;
    std::vector<uint8_t> mul(const std::vector<uint8_t>& v) const;
    bool is_identity() const;
    bool operator==(const FieldMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    int rank() const;
    FieldMatrix rref(std::vector<int>* pivots = nullptr) const;
    FieldMatrix row_basis() const;
    FieldMatrix nullspace() const;
    bool in_row_space(const std::vector<uint8_t>& v) const;
    bool same_row_space(const FieldMatrix& o) const;

private:
    void check_field(const FieldMatrix& o) const;
    FieldContextPtr f_;
    int rows_, cols_;
    std::vector<uint8_t> a_;
};

}  // namespace qrs
