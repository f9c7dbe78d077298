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

#include "qrs/spectral.hpp"

#include <stdexcept>

namespace qrs {

namespace {

FieldMatrix vandermonde(const FieldContextPtr& f, int sign) {
    const int n = f->order();
    FieldMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.set(i, j, f->alpha_pow(sign * i * j));
    }
    return m;
}

}  // namespace

FieldMatrix dft_matrix(const FieldContextPtr& f) { return vandermonde(f, 1); }

FieldMatrix idft_matrix(const FieldContextPtr& f) { return vandermonde(f, -1); }

BinaryMatrix binary_expand_matrix(const FieldMatrix& m, const Basis& b) {
    if (!m.field()->same_field(*b.field())) {
        throw std::invalid_argument("binary_expand_matrix: matrix and basis over different fields");
    }
    const FieldContextPtr& f = b.field();
    const int k = b.size();
    BinaryMatrix out(m.rows() * k, m.cols() * k);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const uint8_t e = m.at(i, j);
            if (!e) continue;
            // Column l of the block: coordinates of e * b_l.
            for (int l = 0; l < k; ++l) {
                const std::vector<uint8_t> col = b.coords(f->mul(e, b.element(l)));
                for (int r = 0; r < k; ++r) {
                    if (col[r]) out.set(i * k + r, j * k + l, true);
                }
            }
        }
    }
    return out;
}

FrequencyLayout FrequencyLayout::for_rs(int k, int n_symbols, int code_dim) {
    if (code_dim < 1 || 2 * code_dim >= n_symbols) {
        throw std::invalid_argument("frequency layout needs 1 <= K < N/2");
    }
    FrequencyLayout l;
    l.k = k;
    l.n_symbols = n_symbols;
    l.code_dim = code_dim;
    return l;
}

std::vector<int> FrequencyLayout::message_freqs() const {
    std::vector<int> v = {0};
    for (int f = code_dim + 1; f <= n_symbols - code_dim - 1; ++f) v.push_back(f);
    return v;
}

std::vector<int> FrequencyLayout::zero_freqs() const {
    std::vector<int> v;
    for (int f = 1; f <= code_dim; ++f) v.push_back(f);
    return v;
}

std::vector<int> FrequencyLayout::h_freqs() const {
    std::vector<int> v;
    for (int f = n_symbols - code_dim; f <= n_symbols - 1; ++f) v.push_back(f);
    return v;
}

std::vector<int> FrequencyLayout::message_qubits() const {
    std::vector<int> v;
    for (int f : message_freqs()) {
        for (int bit = 0; bit < k; ++bit) v.push_back(qubit_of(f, bit));
    }
    return v;
}

}  // namespace qrs
