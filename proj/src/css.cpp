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

#include <sstream>
#include <stdexcept>

namespace qrs {

PauliOperator::PauliOperator(BinaryVector x, BinaryVector z, int sign)
    : n_(x.size()), x_(std::move(x)), z_(std::move(z)), sign_(sign) {
    if (x_.size() != z_.size()) throw std::invalid_argument("x/z length mismatch");
    if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("sign must be +1 or -1");
}

PauliOperator PauliOperator::single(int n, int qubit, char kind) {
    PauliOperator p(n);
    switch (kind) {
        case 'X': p.x_.set(qubit, true); break;
        case 'Z': p.z_.set(qubit, true); break;
        case 'Y':
            p.x_.set(qubit, true);
            p.z_.set(qubit, true);
            break;
        default: throw std::invalid_argument("Pauli kind must be X, Y or Z");
    }
    return p;
}

PauliOperator PauliOperator::x_string(const BinaryVector& support) {
    return PauliOperator(support, BinaryVector(support.size()));
}

PauliOperator PauliOperator::z_string(const BinaryVector& support) {
    return PauliOperator(BinaryVector(support.size()), support);
}

int PauliOperator::weight() const {
    int w = 0;
    for (int i = 0; i < n_; ++i) {
        if (x_.get(i) || z_.get(i)) ++w;
    }
    return w;
}

bool PauliOperator::commutes_with(const PauliOperator& o) const {
    if (o.n_ != n_) throw std::invalid_argument("qubit count mismatch");
    return ((x_.dot(o.z_) ^ z_.dot(o.x_)) & 1) == 0;
}

PauliOperator PauliOperator::composed_with(const PauliOperator& o) const {
    if (o.n_ != n_) throw std::invalid_argument("qubit count mismatch");
    PauliOperator p(n_);
    p.x_ = x_;
    p.x_.xor_in(o.x_);
    p.z_ = z_;
    p.z_.xor_in(o.z_);
    p.sign_ = sign_ * o.sign_ * (z_.dot(o.x_) ? -1 : 1);
    return p;
}

std::string PauliOperator::label() const {
    std::string s(n_, 'I');
    for (int i = 0; i < n_; ++i) {
        const bool x = x_.get(i), z = z_.get(i);
        if (x && z) s[i] = 'Y';
        else if (x) s[i] = 'X';
        else if (z) s[i] = 'Z';
    }
    return s;
}

std::vector<PauliOperator> QuantumCssCode::x_stabilizers() const {
    std::vector<PauliOperator> out;
    out.reserve(stab_.rows());
    for (int r = 0; r < stab_.rows(); ++r) out.push_back(PauliOperator::x_string(stab_.row(r)));
    return out;
}

std::vector<PauliOperator> QuantumCssCode::z_stabilizers() const {
    std::vector<PauliOperator> out;
    out.reserve(stab_.rows());
    for (int r = 0; r < stab_.rows(); ++r) out.push_back(PauliOperator::z_string(stab_.row(r)));
    return out;
}

BinaryVector QuantumCssCode::coset_representative(uint64_t j) const {
    if (k_logical_ < 64 && j >= (uint64_t(1) << k_logical_)) {
        throw std::out_of_range("coset index out of range");
    }
    BinaryVector w(n_);
    for (int t = 0; t < k_logical_; ++t) {
        if ((j >> t) & 1u) w.xor_in(coset_basis_.row(t));
    }
    return w;
}

std::vector<BinaryVector> QuantumCssCode::coset_representatives(uint64_t budget) const {
    if (k_logical_ >= 63 || (uint64_t(1) << k_logical_) > budget) {
        throw std::length_error("coset representative count exceeds budget");
    }
    std::vector<BinaryVector> out;
    out.reserve(size_t(1) << k_logical_);
    for (uint64_t j = 0; j < (uint64_t(1) << k_logical_); ++j) out.push_back(coset_representative(j));
    return out;
}

bool QuantumCssCode::stabilizer_contains(const BinaryVector& x_part,
                                         const BinaryVector& z_part) const {
    return stab_rref_.in_row_space(x_part) && stab_rref_.in_row_space(z_part);
}

void QuantumCssCode::derive_logicals() {
    const int kk = stab_.rows();
    logical_x_.clear();
    logical_z_.clear();
    // Logical X_t is the X-string of coset basis row t. Logical Z_t solves
    //   G z = 0,  U z = e_t
    // over F_2, where U stacks the coset basis rows; the RREF particular
    // solution makes the choice reproducible. All right-hand sides are unit
    // vectors, so one elimination of [M | I] yields every solution: with
    // R M = rref(M), the particular solution for e_j reads off column j
    // of R at the pivot rows.
    const BinaryMatrix system = BinaryMatrix::vstack(stab_, coset_basis_);
    const int rows = kk + k_logical_;
    BinaryMatrix aug(rows, n_ + rows);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < n_; ++c) aug.set(r, c, system.get(r, c));
        aug.set(r, n_ + r, true);
    }
    std::vector<int> pivots;
    const BinaryMatrix red = aug.rref(&pivots);
    if (static_cast<int>(pivots.size()) < rows || pivots[rows - 1] >= n_) {
        throw std::logic_error("logical Z system is inconsistent");
    }
    for (int t = 0; t < k_logical_; ++t) {
        logical_x_.push_back(PauliOperator::x_string(coset_basis_.row(t)));
        BinaryVector z(n_);
        for (int r = 0; r < rows; ++r) {
            if (red.get(r, n_ + kk + t)) z.set(pivots[r], true);
        }
        logical_z_.push_back(PauliOperator::z_string(z));
    }
    // Commutation invariants: logicals commute with all stabilizers and
    // pair up anticommuting exactly on matching indices.
    std::vector<BinaryVector> gen_rows;
    gen_rows.reserve(kk);
    for (int r = 0; r < kk; ++r) gen_rows.push_back(stab_.row(r));
    for (int i = 0; i < k_logical_; ++i) {
        for (int r = 0; r < kk; ++r) {
            // The mixed pairs are the binding constraints; same-type pairs
            // commute automatically.
            if (logical_z_[i].z_bits().dot(gen_rows[r]) != 0) {
                throw std::logic_error("logical Z fails to commute with X stabilizer");
            }
            if (logical_x_[i].x_bits().dot(gen_rows[r]) != 0) {
                throw std::logic_error("logical X fails to commute with Z stabilizer");
            }
        }
        for (int j = 0; j < k_logical_; ++j) {
            const int sym = logical_x_[i].x_bits().dot(logical_z_[j].z_bits());
            if (sym != (i == j ? 1 : 0)) {
                throw std::logic_error("logical commutation matrix is not the identity");
            }
        }
    }
}

namespace {

std::optional<int> try_exact_distance(const LinearCode& dual) {
    try {
        return min_distance(dual).value;
    } catch (const std::length_error&) {
        return std::nullopt;
    }
}

}  // namespace

QuantumCssCode build_css(const LinearCode& cbin) {
    if (!cbin.is_binary()) throw std::invalid_argument("build_css requires a binary code");
    if (cbin.dimension() == 0) {
        throw std::invalid_argument("build_css: dimension 0 leaves no stabilizers");
    }
    if (!is_weakly_self_dual(cbin)) {
        throw std::invalid_argument("build_css requires a weakly self-dual code");
    }
    QuantumCssCode q;
    q.n_ = cbin.length();
    q.code_ = cbin;
    q.dual_ = dual_code(cbin);
    q.k_logical_ = q.n_ - 2 * cbin.dimension();
    q.stab_ = cbin.generator_bits();
    q.stab_rref_ = q.stab_.row_basis();
    q.coset_basis_ = [&] {
        const FieldMatrix comp = complement_basis(cbin, q.dual_);
        BinaryMatrix m(comp.rows(), comp.cols());
        for (int r = 0; r < comp.rows(); ++r) {
            for (int c = 0; c < comp.cols(); ++c) m.set(r, c, comp.at(r, c) != 0);
        }
        return m;
    }();
    q.distance_exact_ = try_exact_distance(q.dual_);
    q.distance_bound_ = q.distance_exact_.value_or(1);
    q.derive_logicals();
    return q;
}

QuantumCssCode build_quantum_rs(int k, int delta) {
    const FieldContextPtr f = make_field(k);
    const Basis b = find_self_dual_basis(f);
    const LinearCode rs = reed_solomon(f, delta);
    const int n_symbols = rs.length();
    const int code_dim = rs.dimension();
    const LinearCode cbin = binary_expansion(rs, b);

    QuantumCssCode q;
    q.n_ = cbin.length();
    q.code_ = cbin;
    q.dual_ = dual_code(cbin);
    q.k_logical_ = q.n_ - 2 * cbin.dimension();
    q.field_ = f;
    q.basis_ = b;
    q.delta_ = delta;
    q.layout_ = FrequencyLayout::for_rs(k, n_symbols, code_dim);

    // Stabilizer generator matrix: rows of the expanded DFT at the dual
    // code's zero frequencies {1..K}. These span B(C) (duality theorem with
    // a self-dual basis), and the syndrome circuit reads out exactly these
    // parities, so classical and circuit syndromes agree bit for bit.
    const BinaryMatrix dft_bits = binary_expand_matrix(dft_matrix(f), b);
    BinaryMatrix stab(k * code_dim, q.n_);
    int r = 0;
    for (int freq : q.layout_->zero_freqs()) {
        for (int bit = 0; bit < k; ++bit) {
            stab.set_row(r++, dft_bits.row(q.layout_->qubit_of(freq, bit)));
        }
    }
    q.stab_ = stab;
    q.stab_rref_ = stab.row_basis();
    if (!q.stab_rref_.same_row_space(cbin.generator_bits())) {
        throw std::logic_error("spectral stabilizer rows do not span B(C)");
    }

    // Coset basis: the encoder maps message qubit t (symbol-major over the
    // message frequencies) onto the coset of column t' of the expanded
    // inverse DFT, so logical labels follow the circuit exactly.
    const BinaryMatrix idft_cols = binary_expand_matrix(idft_matrix(f), b).transpose();
    BinaryMatrix coset(q.k_logical_, q.n_);
    r = 0;
    for (int freq : q.layout_->message_freqs()) {
        for (int bit = 0; bit < k; ++bit) {
            coset.set_row(r++, idft_cols.row(q.layout_->qubit_of(freq, bit)));
        }
    }
    q.coset_basis_ = coset;
    // Dual membership is orthogonality to the generator rows of B(C).
    std::vector<BinaryVector> gen_rows;
    gen_rows.reserve(q.stab_.rows());
    for (int g = 0; g < q.stab_.rows(); ++g) gen_rows.push_back(q.stab_.row(g));
    for (int i = 0; i < coset.rows(); ++i) {
        const BinaryVector row = coset.row(i);
        for (const BinaryVector& g : gen_rows) {
            if (g.dot(row) != 0) {
                throw std::logic_error("coset basis row leaves the dual code");
            }
        }
    }
    BinaryMatrix stacked = BinaryMatrix::vstack(q.stab_rref_, coset);
    if (stacked.rank() != q.stab_rref_.rows() + coset.rows()) {
        throw std::logic_error("coset basis rows are dependent modulo B(C)");
    }

    q.distance_bound_ = code_dim + 1;  // parameter theorem bound d >= K+1
    q.distance_exact_ = try_exact_distance(q.dual_);
    q.derive_logicals();
    return q;
}

std::pair<BinaryVector, BinaryVector> classical_syndrome(const QuantumCssCode& q,
                                                         const PauliOperator& e) {
    if (e.qubits() != q.qubits()) throw std::invalid_argument("error size mismatch");
    return {q.stabilizer_matrix().mul(e.x_bits()), q.stabilizer_matrix().mul(e.z_bits())};
}

namespace {

std::string syndrome_key(const BinaryVector& s_x, const BinaryVector& s_z) {
    return s_x.to_string() + "|" + s_z.to_string();
}

uint64_t table_size_bound(int n, int t) {
    uint64_t total = 1;  // identity
    uint64_t binom = 1;
    uint64_t pow3 = 1;
    for (int w = 1; w <= t; ++w) {
        binom = binom * uint64_t(n - w + 1) / uint64_t(w);
        pow3 *= 3;
        total += binom * pow3;
    }
    return total;
}

}  // namespace

int default_correction_radius(const QuantumCssCode& q) {
    const int d = q.distance_exact().value_or(q.distance_bound());
    return (d - 1) / 2;
}

DecoderTable build_decoder_table(const QuantumCssCode& q, int t, uint64_t budget) {
    const int capability = default_correction_radius(q);
    if (t < 0 || t > capability) {
        throw std::invalid_argument("correction radius " + std::to_string(t) +
                                    " exceeds code capability " + std::to_string(capability));
    }
    if (table_size_bound(q.qubits(), t) > budget) {
        throw std::length_error("decoder table exceeds memory budget");
    }
    DecoderTable table;
    table.n_ = q.qubits();
    table.t_ = t;
    const char kinds[3] = {'X', 'Z', 'Y'};

    // Weight-ascending enumeration, so the stored representative for every
    // syndrome is minimum-weight; position sets lexicographic, kinds in
    // X, Z, Y order per position.
    std::vector<int> pos;
    auto visit = [&](const PauliOperator& e) {
        const auto [sx, sz] = classical_syndrome(q, e);
        table.table_.emplace(syndrome_key(sx, sz), e);  // first hit wins
    };
    visit(PauliOperator::identity(q.qubits()));
    for (int w = 1; w <= t; ++w) {
        pos.assign(w, 0);
        for (int i = 0; i < w; ++i) pos[i] = i;
        for (;;) {
            std::vector<int> kind_idx(w, 0);
            for (;;) {
                PauliOperator e = PauliOperator::identity(q.qubits());
                for (int i = 0; i < w; ++i) {
                    e = e.composed_with(PauliOperator::single(q.qubits(), pos[i], kinds[kind_idx[i]]));
                }
                visit(e);
                int c = 0;
                while (c < w && ++kind_idx[c] == 3) kind_idx[c++] = 0;
                if (c == w) break;
            }
            // next combination
            int i = w - 1;
            while (i >= 0 && pos[i] == q.qubits() - w + i) --i;
            if (i < 0) break;
            ++pos[i];
            for (int j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
        }
    }
    return table;
}

std::optional<PauliOperator> DecoderTable::decode(const BinaryVector& s_x,
                                                  const BinaryVector& s_z) const {
    const auto it = table_.find(syndrome_key(s_x, s_z));
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

std::string describe_code(const QuantumCssCode& q) {
    std::ostringstream os;
    os << "[[" << q.qubits() << "," << q.logical_qubits() << ",";
    if (q.distance_exact()) os << *q.distance_exact();
    else os << "d>=" << q.distance_bound();
    os << "]]\n";
    for (const auto& p : q.x_stabilizers()) os << "X " << p.label() << "\n";
    for (const auto& p : q.z_stabilizers()) os << "Z " << p.label() << "\n";
    return os.str();
}

}  // namespace qrs
