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

#include <vector>

#include "qrs/galois.hpp"
#include "qrs/linalg.hpp"

namespace qrs {

/// The discrete Fourier transform over GF(2^k) of length N = 2^k - 1:
/// entries alpha^{ij}. Since N is odd, N*1 = 1 in characteristic 2 and the
/// inverse transform alpha^{-ij} is exact with no scalar factor.
FieldMatrix dft_matrix(const FieldContextPtr& f);
FieldMatrix idft_matrix(const FieldContextPtr& f);

/// The k*rows x k*cols F_2 matrix acting on symbol-major coordinate vectors
/// as M acts on field vectors: expand(M v) = binary_expand_matrix(M) expand(v).
/// Block (i, j) is the k x k matrix of multiplication by M[i][j] in basis B.
BinaryMatrix binary_expand_matrix(const FieldMatrix& m, const Basis& b);

/// Frequency-domain bookkeeping for a Reed-Solomon instance with parameters
/// (N, K): the three index sets partition {0..N-1}.
///
///   zero_freqs    {1..K}          zeros of the dual code; the bit-flip
///                                 syndrome is read here
///   h_freqs       {N-K..N-1}      support of C; the encoder's Hadamard
///                                 block, and the phase syndrome after the
///                                 H-sandwich
///   message_freqs {0, K+1..N-K-1} free coset coordinates carrying the
///                                 logical message
struct FrequencyLayout {
    int k = 0;
    int n_symbols = 0;
    int code_dim = 0;  // K

    static FrequencyLayout for_rs(int k, int n_symbols, int code_dim);

    std::vector<int> message_freqs() const;
    std::vector<int> zero_freqs() const;
    std::vector<int> h_freqs() const;

    /// Symbol-major qubit index of (frequency, bit).
    int qubit_of(int freq, int bit) const { return freq * k + bit; }
    int num_qubits() const { return n_symbols * k; }
    int num_message_qubits() const { return k * (n_symbols - 2 * code_dim); }
    int num_check_qubits() const { return k * code_dim; }

    /// Data qubits carrying logical bit t, symbol-major over message_freqs;
    /// position t here matches coset basis row t and logical pair t.
    std::vector<int> message_qubits() const;
};

}  // namespace qrs
