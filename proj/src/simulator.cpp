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

#include "qrs/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace qrs {

StabilizerState::StabilizerState(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("state needs at least one qubit");
    x_.assign(2 * n + 1, BinaryVector(n));
    z_.assign(2 * n + 1, BinaryVector(n));
    phase_.assign(2 * n + 1, 0);
    for (int i = 0; i < n; ++i) {
        x_[i].set(i, true);       // destabilizer X_i
        z_[n + i].set(i, true);   // stabilizer Z_i: the state |0...0>
    }
}

void StabilizerState::apply_h(int q) {
    if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
    for (int i = 0; i < 2 * n_; ++i) {
        const bool x = x_[i].get(q), z = z_[i].get(q);
        if (x && z) phase_[i] = uint8_t((phase_[i] + 2) & 3);  // Y -> -Y
        x_[i].set(q, z);
        z_[i].set(q, x);
    }
}

void StabilizerState::apply_cx(int control, int target) {
    if (control < 0 || control >= n_ || target < 0 || target >= n_) {
        throw std::out_of_range("qubit index out of range");
    }
    if (control == target) throw std::invalid_argument("CNOT control equals target");
    for (int i = 0; i < 2 * n_; ++i) {
        const bool xc = x_[i].get(control), zc = z_[i].get(control);
        const bool xt = x_[i].get(target), zt = z_[i].get(target);
        if (xc && zt && !(xt ^ zc)) phase_[i] = uint8_t((phase_[i] + 2) & 3);
        x_[i].set(target, xt ^ xc);
        z_[i].set(control, zc ^ zt);
    }
}

void StabilizerState::apply_x(int q) {
    if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
    for (int i = 0; i < 2 * n_; ++i) {
        if (z_[i].get(q)) phase_[i] = uint8_t((phase_[i] + 2) & 3);
    }
}

void StabilizerState::apply_z(int q) {
    if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
    for (int i = 0; i < 2 * n_; ++i) {
        if (x_[i].get(q)) phase_[i] = uint8_t((phase_[i] + 2) & 3);
    }
}

namespace {

// Phase exponent contribution of multiplying single-qubit Paulis
// (x1, z1) * (x2, z2), from the tableau update rules.
inline int g_phase(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) return 0;
    if (x1 && z1) return int(z2) - int(x2);
    if (x1) return z2 ? (x2 ? 1 : -1) : 0;   // (1,0): z2 * (2*x2 - 1)
    return x2 ? (z2 ? -1 : 1) : 0;           // (0,1): x2 * (1 - 2*z2)
}

}  // namespace

void StabilizerState::rowsum(int h, int i) {
    int g = 0;
    for (int q = 0; q < n_; ++q) {
        g += g_phase(x_[i].get(q), z_[i].get(q), x_[h].get(q), z_[h].get(q));
    }
    phase_[h] = uint8_t(((phase_[h] + phase_[i] + g) % 4 + 4) & 3);
    x_[h].xor_in(x_[i]);
    z_[h].xor_in(z_[i]);
}

MeasurementResult StabilizerState::measure_z(int q, std::mt19937_64& rng) {
    if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
    int p = -1;
    for (int i = n_; i < 2 * n_; ++i) {
        if (x_[i].get(q)) { p = i; break; }
    }
    if (p >= 0) {
        // Outcome is random: the measured observable anticommutes with
        // stabilizer row p.
        for (int i = 0; i < 2 * n_; ++i) {
            if (i != p && x_[i].get(q)) rowsum(i, p);
        }
        x_[p - n_] = x_[p];
        z_[p - n_] = z_[p];
        phase_[p - n_] = phase_[p];
        const int r = int(rng() & 1u);
        x_[p] = BinaryVector(n_);
        z_[p] = BinaryVector(n_);
        z_[p].set(q, true);
        phase_[p] = uint8_t(r ? 2 : 0);
        return {r, false};
    }
    // Deterministic: accumulate the matching stabilizer product in scratch.
    const int scratch = 2 * n_;
    x_[scratch] = BinaryVector(n_);
    z_[scratch] = BinaryVector(n_);
    phase_[scratch] = 0;
    for (int i = 0; i < n_; ++i) {
        if (x_[i].get(q)) rowsum(scratch, i + n_);
    }
    return {phase_[scratch] == 2 ? 1 : 0, true};
}

void StabilizerState::apply_pauli(const PauliOperator& e) {
    if (e.qubits() != n_) throw std::invalid_argument("Pauli size mismatch");
    for (int i = 0; i < 2 * n_; ++i) {
        const int anti = (x_[i].dot(e.z_bits()) ^ z_[i].dot(e.x_bits())) & 1;
        if (anti) phase_[i] = uint8_t((phase_[i] + 2) & 3);
    }
}

int StabilizerState::phase_of_product(const std::vector<int>& rows) const {
    BinaryVector ax(n_), az(n_);
    int phase = 0;
    for (int i : rows) {
        int g = 0;
        for (int q = 0; q < n_; ++q) {
            g += g_phase(x_[i].get(q), z_[i].get(q), ax.get(q), az.get(q));
        }
        phase = ((phase + phase_[i] + g) % 4 + 4) & 3;
        ax.xor_in(x_[i]);
        az.xor_in(z_[i]);
    }
    return phase;
}

bool StabilizerState::is_stabilized_by(const PauliOperator& p) const {
    if (p.qubits() != n_) throw std::invalid_argument("Pauli size mismatch");
    // Solve for a generator subset with the same symplectic part.
    BinaryMatrix a(2 * n_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int q = 0; q < n_; ++q) {
            a.set(q, i, x_[n_ + i].get(q));
            a.set(n_ + q, i, z_[n_ + i].get(q));
        }
    }
    BinaryVector target(2 * n_);
    for (int q = 0; q < n_; ++q) {
        target.set(q, p.x_bits().get(q));
        target.set(n_ + q, p.z_bits().get(q));
    }
    const auto combo = a.solve(target);
    if (!combo) return false;
    std::vector<int> rows;
    for (int i = 0; i < n_; ++i) {
        if (combo->get(i)) rows.push_back(n_ + i);
    }
    const int phase = phase_of_product(rows);
    // Convert the Hermitian-form tableau phase to the XZ-form sign of p:
    // each Y site contributes one factor of i.
    int y_sites = 0;
    for (int q = 0; q < n_; ++q) y_sites += (p.x_bits().get(q) && p.z_bits().get(q));
    const int xz_exponent = ((phase + y_sites) % 4 + 4) & 3;
    if (xz_exponent != 0 && xz_exponent != 2) {
        throw std::logic_error("stabilizer product has imaginary phase");
    }
    return (xz_exponent == 0 ? +1 : -1) == p.sign();
}

PauliOperator StabilizerState::stabilizer_row(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("stabilizer row out of range");
    // Convert the row to XZ form.
    int y_sites = 0;
    for (int q = 0; q < n_; ++q) y_sites += (x_[n_ + i].get(q) && z_[n_ + i].get(q));
    const int exponent = ((phase_[n_ + i] + y_sites) % 4 + 4) & 3;
    return PauliOperator(x_[n_ + i], z_[n_ + i], exponent == 0 ? +1 : -1);
}

bool MeasurementLog::all_deterministic() const {
    for (size_t i = 0; i < written.size(); ++i) {
        if (written[i] && !deterministic[i]) return false;
    }
    return true;
}

MeasurementLog apply_circuit(StabilizerState& s, const Circuit& c, std::mt19937_64& rng) {
    if (c.n_qubits != s.qubits()) throw std::invalid_argument("circuit width mismatch");
    MeasurementLog log;
    log.outcomes.assign(c.n_cbits, 0);
    log.deterministic.assign(c.n_cbits, false);
    log.written.assign(c.n_cbits, false);
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: s.apply_h(g.q0); break;
            case GateKind::CX: s.apply_cx(g.q0, g.q1); break;
            case GateKind::X: s.apply_x(g.q0); break;
            case GateKind::Z: s.apply_z(g.q0); break;
            case GateKind::MZ: {
                const MeasurementResult r = s.measure_z(g.q0, rng);
                log.outcomes[g.q1] = r.outcome;
                log.deterministic[g.q1] = r.deterministic;
                log.written[g.q1] = true;
                break;
            }
        }
    }
    return log;
}

DenseState::DenseState(int n, const BinaryVector& input_bits) : n_(n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("dense register limited to 14 qubits");
    if (input_bits.size() != n) throw std::invalid_argument("input width mismatch");
    amp_.assign(size_t(1) << n, {0.0, 0.0});
    uint32_t idx = 0;
    for (int q = 0; q < n; ++q) {
        if (input_bits.get(q)) idx |= uint32_t(1) << q;
    }
    amp_[idx] = {1.0, 0.0};
}

double DenseState::norm() const {
    double s = 0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

double DenseState::marginal_one(int q) const {
    double s = 0;
    for (size_t i = 0; i < amp_.size(); ++i) {
        if ((i >> q) & 1u) s += std::norm(amp_[i]);
    }
    return s;
}

void DenseState::apply_h(int q) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const size_t bit = size_t(1) << q;
    for (size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) continue;
        const auto a = amp_[i], b = amp_[i | bit];
        amp_[i] = (a + b) * inv_sqrt2;
        amp_[i | bit] = (a - b) * inv_sqrt2;
    }
}

void DenseState::apply_cx(int control, int target) {
    const size_t cb = size_t(1) << control, tb = size_t(1) << target;
    for (size_t i = 0; i < amp_.size(); ++i) {
        if ((i & cb) && !(i & tb)) std::swap(amp_[i], amp_[i | tb]);
    }
}

void DenseState::apply_x(int q) {
    const size_t bit = size_t(1) << q;
    for (size_t i = 0; i < amp_.size(); ++i) {
        if (!(i & bit)) std::swap(amp_[i], amp_[i | bit]);
    }
}

void DenseState::apply_z(int q) {
    const size_t bit = size_t(1) << q;
    for (size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) amp_[i] = -amp_[i];
    }
}

DenseState dense_simulate(const Circuit& c, const BinaryVector& input_bits) {
    if (c.count(GateKind::MZ) > 0) {
        throw std::invalid_argument("dense_simulate does not support measurements");
    }
    DenseState s(c.n_qubits, input_bits);
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: s.apply_h(g.q0); break;
            case GateKind::CX: s.apply_cx(g.q0, g.q1); break;
            case GateKind::X: s.apply_x(g.q0); break;
            case GateKind::Z: s.apply_z(g.q0); break;
            case GateKind::MZ: break;  // unreachable
        }
    }
    return s;
}

}  // namespace qrs
