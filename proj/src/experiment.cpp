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

#include "qrs/experiment.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "qrs/codes.hpp"
#include "qrs/spectral.hpp"

namespace qrs {

void RunReport::add_param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
}

void RunReport::add_check(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
}

void RunReport::add_count(const std::string& key, long long value) {
    counts.emplace_back(key, value);
}

bool RunReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& [k, v] : params) os << "  " << k << " = " << v << "\n";
    for (const auto& c : checks) {
        os << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    for (const auto& [k, v] : counts) os << "count " << k << " = " << v << "\n";
    if (!description.empty()) os << description;
    os << "time_ms: " << elapsed_ms << "\n";
    os << "overall: " << (all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    nlohmann::json jp = nlohmann::json::object();
    for (const auto& [k, v] : params) jp[k] = v;
    j["params"] = jp;
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : checks) {
        jc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["checks"] = jc;
    nlohmann::json jn = nlohmann::json::object();
    for (const auto& [k, v] : counts) jn[k] = v;
    j["counts"] = jn;
    if (!description.empty()) j["description"] = description;
    j["time_ms"] = elapsed_ms;
    j["overall_pass"] = all_pass();
    return j.dump(2);
}

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t seed, long trial) {
    return splitmix64(seed ^ splitmix64(uint64_t(trial) + 1));
}

std::string basis_to_string(const Basis& b) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < b.size(); ++i) {
        if (i) os << ", ";
        os << "0x" << std::hex << int(b.element(i)) << std::dec;
    }
    os << ")";
    return os.str();
}

std::string code_params_string(const QuantumCssCode& q) {
    std::ostringstream os;
    os << "[[" << q.qubits() << "," << q.logical_qubits() << ",";
    if (q.distance_exact()) os << *q.distance_exact();
    else os << "d>=" << q.distance_bound();
    os << "]]";
    return os.str();
}

// Embeds a data-register Pauli into the wider data+ancilla register.
PauliOperator pad_error(const PauliOperator& e, int total_qubits) {
    BinaryVector x(total_qubits), z(total_qubits);
    for (int i = 0; i < e.qubits(); ++i) {
        x.set(i, e.x_bits().get(i));
        z.set(i, e.z_bits().get(i));
    }
    return PauliOperator(x, z, e.sign());
}

// Applies the encoder (an H/CX-only data circuit) to the prefix of a wider
// register.
void apply_data_circuit(StabilizerState& s, const Circuit& c) {
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: s.apply_h(g.q0); break;
            case GateKind::CX: s.apply_cx(g.q0, g.q1); break;
            case GateKind::X: s.apply_x(g.q0); break;
            case GateKind::Z: s.apply_z(g.q0); break;
            case GateKind::MZ: throw std::logic_error("unexpected measurement");
        }
    }
}

struct ExtractionResult {
    BinaryVector s_x, s_z;
    bool deterministic = true;
};

// Runs the syndrome circuit and resets the measured ancillas back to |0>,
// so extraction can be repeated on the same register.
ExtractionResult extract_syndrome(StabilizerState& s, const Circuit& syndrome_circuit,
                                  int n_data, int kk, std::mt19937_64& rng) {
    MeasurementLog log = apply_circuit(s, syndrome_circuit, rng);
    ExtractionResult r{BinaryVector(kk), BinaryVector(kk), log.all_deterministic()};
    for (int i = 0; i < kk; ++i) {
        r.s_x.set(i, log.outcomes[i] != 0);
        r.s_z.set(i, log.outcomes[kk + i] != 0);
    }
    for (int i = 0; i < 2 * kk; ++i) {
        if (log.outcomes[i]) s.apply_x(n_data + i);
    }
    return r;
}

}  // namespace

RunReport run_code_info(const CodeInfoOptions& opt) {
    Timer timer;
    RunReport rep;
    rep.command = "code-info";
    rep.add_param("k", std::to_string(opt.k));
    rep.add_param("delta", std::to_string(opt.delta));

    const QuantumCssCode q = build_quantum_rs(opt.k, opt.delta);
    const LinearCode rs = reed_solomon(q.field(), opt.delta);
    rep.add_param("N", std::to_string(rs.length()));
    rep.add_param("K", std::to_string(rs.dimension()));
    rep.add_param("code", code_params_string(q));
    rep.add_param("self_dual_basis", basis_to_string(*q.basis()));
    if (q.distance_exact()) rep.add_param("distance_exact", std::to_string(*q.distance_exact()));
    rep.add_param("distance_bound", std::to_string(q.distance_bound()));

    rep.add_check("rs-weakly-self-dual", is_weakly_self_dual(rs));
    rep.add_check("expansion-weakly-self-dual", is_weakly_self_dual(q.binary_code()));
    rep.add_check("duality-diagram", verify_duality_diagram(rs, *q.basis()));
    rep.add_check("parameter-theorem",
                  q.qubits() == opt.k * rs.length() &&
                      q.logical_qubits() == opt.k * (rs.length() - 2 * rs.dimension()) &&
                      q.distance_bound() == rs.dimension() + 1);
    if (q.distance_exact()) {
        rep.add_check("distance-meets-bound", *q.distance_exact() >= q.distance_bound(),
                      "exact " + std::to_string(*q.distance_exact()));
    }
    rep.add_count("physical_qubits", q.qubits());
    rep.add_count("logical_qubits", q.logical_qubits());
    rep.add_count("stabilizer_generators", 2 * q.stabilizer_matrix().rows());
    rep.description = describe_code(q);
    rep.elapsed_ms = timer.ms();
    return rep;
}

RunReport run_emit(const EmitOptions& opt) {
    Timer timer;
    RunReport rep;
    rep.command = "emit";
    rep.add_param("k", std::to_string(opt.k));
    rep.add_param("delta", std::to_string(opt.delta));
    rep.add_param("what", opt.what);
    rep.add_param("out", opt.out_path);

    const QuantumCssCode q = build_quantum_rs(opt.k, opt.delta);
    Circuit c;
    if (opt.what == "encoder") c = build_encoder(q);
    else if (opt.what == "syndrome") c = build_syndrome_circuit(q);
    else throw std::invalid_argument("emit: --what must be 'encoder' or 'syndrome'");

    const std::string text = write_circuit(c);
    std::ofstream out(opt.out_path);
    if (!out || !(out << text) || !out.flush()) {
        throw std::runtime_error("cannot write circuit to '" + opt.out_path + "'");
    }
    rep.add_check("round-trip", parse_circuit(text) == c);
    rep.add_count("qubits", c.n_qubits);
    rep.add_count("cbits", c.n_cbits);
    rep.add_count("gates", static_cast<long long>(c.gates.size()));
    rep.add_count("h_gates", c.count(GateKind::H));
    rep.add_count("cx_gates", c.count(GateKind::CX));
    rep.add_count("measurements", c.count(GateKind::MZ));
    rep.elapsed_ms = timer.ms();
    return rep;
}

RunReport run_verify(const VerifyOptions& opt) {
    Timer timer;
    RunReport rep;
    rep.command = "verify";
    rep.add_param("k", std::to_string(opt.k));
    rep.add_param("delta", std::to_string(opt.delta));
    rep.add_param("level", opt.level);
    const bool exhaustive = opt.level != "quick";

    const QuantumCssCode q = build_quantum_rs(opt.k, opt.delta);
    const LinearCode rs = reed_solomon(q.field(), opt.delta);
    const Basis& basis = *q.basis();
    const FrequencyLayout& layout = *q.layout();
    const int n = q.qubits();
    const int kk = layout.num_check_qubits();
    rep.add_param("code", code_params_string(q));

    rep.add_check("parameter-theorem",
                  n == opt.k * layout.n_symbols &&
                      q.logical_qubits() == opt.k * (layout.n_symbols - 2 * layout.code_dim) &&
                      q.distance_bound() == layout.code_dim + 1);
    rep.add_check("rs-weakly-self-dual", is_weakly_self_dual(rs));
    rep.add_check("expansion-weakly-self-dual", is_weakly_self_dual(q.binary_code()));
    rep.add_check("duality-diagram", verify_duality_diagram(rs, basis));
    if (q.distance_exact()) {
        rep.add_check("exact-distance-meets-bound", *q.distance_exact() >= q.distance_bound());
    }

    // Spectral membership of C and its dual.
    {
        const FieldMatrix dft = dft_matrix(q.field());
        const LinearCode rs_dual = dual_code(rs);
        bool ok = true;
        long tested = 0;
        std::string witness;
        auto probe = [&](const std::vector<uint8_t>& v) {
            const auto spec = dft.mul(v);
            bool in_c = true;
            for (int i = 0; i <= opt.delta - 2; ++i) in_c &= (spec[i] == 0);
            bool in_dual = true;
            for (int i = 1; i <= layout.code_dim; ++i) in_dual &= (spec[i] == 0);
            const bool here = (in_c == rs.contains(v)) && (in_dual == rs_dual.contains(v));
            if (!here && witness.empty()) {
                witness = "vector";
                for (uint8_t x : v) witness += " " + std::to_string(int(x));
            }
            ok = ok && here;
            ++tested;
        };
        if (exhaustive && opt.k <= 3) {
            rs.for_each_codeword(probe);
            rs_dual.for_each_codeword(probe);
        }
        std::mt19937_64 rng(opt.seed);
        for (int t = 0; t < 200; ++t) {
            std::vector<uint8_t> v(layout.n_symbols);
            for (auto& x : v) x = uint8_t(rng() % q.field()->size());
            probe(v);
        }
        rep.add_check("spectral-membership", ok,
                      ok ? std::to_string(tested) + " vectors" : "witness: " + witness);
    }

    // Stabilizer and logical commutation.
    {
        bool ok = true;
        const auto xs = q.x_stabilizers();
        const auto zs = q.z_stabilizers();
        for (const auto& a : xs) {
            for (const auto& b : zs) ok &= a.commutes_with(b);
        }
        rep.add_check("stabilizer-commutation", ok);
        bool lok = true;
        for (int i = 0; i < q.logical_qubits(); ++i) {
            for (const auto& s : xs) {
                lok &= q.logical_x()[i].commutes_with(s) && q.logical_z()[i].commutes_with(s);
            }
            for (const auto& s : zs) {
                lok &= q.logical_x()[i].commutes_with(s) && q.logical_z()[i].commutes_with(s);
            }
            for (int j = 0; j < q.logical_qubits(); ++j) {
                lok &= q.logical_x()[i].commutes_with(q.logical_z()[j]) == (i != j);
            }
        }
        rep.add_check("logical-commutation", lok);
    }

    const Circuit encoder = build_encoder(q);
    const Circuit syndrome_circuit = build_syndrome_circuit(q);
    std::mt19937_64 rng(opt.seed);

    // Encoder stabilization: encoded tableau states are fixed by every
    // stabilizer generator and carry the logical-Z signs of the input.
    {
        bool ok = true;
        std::vector<uint64_t> inputs;
        if (exhaustive && q.logical_qubits() <= 10) {
            for (uint64_t j = 0; j < (uint64_t(1) << q.logical_qubits()); ++j) inputs.push_back(j);
        } else {
            inputs.push_back(0);
            for (int i = 0; i < 15; ++i) {
                inputs.push_back(rng() & ((uint64_t(1) << q.logical_qubits()) - 1));
            }
        }
        const auto msg = layout.message_qubits();
        std::string witness;
        for (uint64_t j : inputs) {
            StabilizerState s(n);
            for (size_t t = 0; t < msg.size(); ++t) {
                if ((j >> t) & 1u) s.apply_x(msg[t]);
            }
            apply_data_circuit(s, encoder);
            bool here = true;
            for (const auto& p : q.x_stabilizers()) here &= s.is_stabilized_by(p);
            for (const auto& p : q.z_stabilizers()) here &= s.is_stabilized_by(p);
            for (int t = 0; t < q.logical_qubits(); ++t) {
                PauliOperator lz = q.logical_z()[t];
                if ((j >> t) & 1u) lz.negate();
                here &= s.is_stabilized_by(lz);
            }
            if (!here && witness.empty()) witness = "logical input " + std::to_string(j);
            ok &= here;
        }
        rep.add_check("encoder-stabilization", ok,
                      ok ? std::to_string(inputs.size()) + " logical inputs"
                         : "witness: " + witness);
    }

    // Dense-amplitude encoder check when the register fits the oracle.
    if (n <= DenseState::kMaxQubits) {
        bool ok = true;
        const auto msg = layout.message_qubits();
        for (uint64_t j = 0; j < (uint64_t(1) << q.logical_qubits()); ++j) {
            BinaryVector in(n);
            for (size_t t = 0; t < msg.size(); ++t) in.set(msg[t], (j >> t) & 1u);
            DenseState s = dense_simulate(encoder, in);
            std::set<uint32_t> coset;
            const BinaryVector w = q.coset_representative(j);
            q.binary_code().for_each_codeword([&](const std::vector<uint8_t>& c) {
                uint32_t idx = 0;
                for (size_t i = 0; i < c.size(); ++i) {
                    if ((c[i] ^ (w.get(int(i)) ? 1 : 0)) & 1) idx |= uint32_t(1) << i;
                }
                coset.insert(idx);
            });
            const double amp = 1.0 / std::sqrt(double(coset.size()));
            for (uint32_t idx = 0; idx < (uint32_t(1) << n); ++idx) {
                const double expected = coset.count(idx) ? amp : 0.0;
                ok &= std::abs(s.amplitude(idx).real() - expected) < 1e-10;
                ok &= std::abs(s.amplitude(idx).imag()) < 1e-10;
            }
        }
        rep.add_check("encoder-amplitudes", ok, "dense oracle");
    }

    // Syndrome circuit agreement with the classical map (weight-1 sweep,
    // plus weight-2 when the instance is small or exhaustive mode asks).
    {
        bool ok = true;
        bool deterministic = true;
        long cases = 0;
        std::string witness;
        const auto msg = layout.message_qubits();
        auto run_case = [&](const PauliOperator& e, uint64_t j) {
            StabilizerState s(syndrome_circuit.n_qubits);
            for (size_t t = 0; t < msg.size(); ++t) {
                if ((j >> t) & 1u) s.apply_x(msg[t]);
            }
            apply_data_circuit(s, encoder);
            s.apply_pauli(pad_error(e, syndrome_circuit.n_qubits));
            ExtractionResult r1 = extract_syndrome(s, syndrome_circuit, n, kk, rng);
            const auto [cx, cz] = classical_syndrome(q, e);
            deterministic &= r1.deterministic;
            // Non-demolition: a second extraction repeats the readout.
            ExtractionResult r2 = extract_syndrome(s, syndrome_circuit, n, kk, rng);
            deterministic &= r2.deterministic;
            const bool here = (r1.s_x == cx) && (r1.s_z == cz) && (r2.s_x == cx) && (r2.s_z == cz);
            if (!here && witness.empty()) witness = "error " + e.label();
            ok &= here;
            ++cases;
        };
        run_case(PauliOperator::identity(n), 0);
        const char kinds[3] = {'X', 'Z', 'Y'};
        for (int qb = 0; qb < n; ++qb) {
            for (char kind : kinds) run_case(PauliOperator::single(n, qb, kind), uint64_t(qb) % 2);
        }
        if (exhaustive && n <= 8) {
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    for (char ka : kinds) {
                        for (char kb : kinds) {
                            run_case(PauliOperator::single(n, a, ka)
                                         .composed_with(PauliOperator::single(n, b, kb)),
                                     0);
                        }
                    }
                }
            }
        }
        rep.add_check("syndrome-agreement", ok,
                      ok ? std::to_string(cases) + " errors" : "witness: " + witness);
        rep.add_check("extraction-deterministic", deterministic);
    }

    // Correction round-trip at the default radius.
    {
        const int t = default_correction_radius(q);
        rep.add_param("t", std::to_string(t));
        if (t >= 1) {
            const DecoderTable table = build_decoder_table(q, t);
            bool ok = true;
            long cases = 0;
            const char kinds[3] = {'X', 'Z', 'Y'};
            std::string witness;
            auto roundtrip = [&](const PauliOperator& e) {
                const auto [sx, sz] = classical_syndrome(q, e);
                const auto corr = table.decode(sx, sz);
                bool here = corr.has_value();
                if (here) {
                    BinaryVector rx = e.x_bits();
                    rx.xor_in(corr->x_bits());
                    BinaryVector rz = e.z_bits();
                    rz.xor_in(corr->z_bits());
                    here = q.stabilizer_contains(rx, rz);
                }
                if (!here && witness.empty()) witness = "error " + e.label();
                ok &= here;
                ++cases;
            };
            for (int qb = 0; qb < n; ++qb) {
                for (char kind : kinds) roundtrip(PauliOperator::single(n, qb, kind));
            }
            if (t >= 2 && exhaustive) {
                for (int a = 0; a < n; ++a) {
                    for (int b = a + 1; b < n; ++b) {
                        for (char ka : kinds) {
                            for (char kb : kinds) {
                                roundtrip(PauliOperator::single(n, a, ka)
                                              .composed_with(PauliOperator::single(n, b, kb)));
                            }
                        }
                    }
                }
            }
            rep.add_check("correction-roundtrip", ok,
                          ok ? "t=" + std::to_string(t) + ", " + std::to_string(cases) + " errors"
                             : "witness: " + witness);
        } else {
            // Detection only: every weight-1 error is seen or acts trivially.
            bool ok = true;
            for (int qb = 0; qb < n; ++qb) {
                for (char kind : {'X', 'Y', 'Z'}) {
                    const PauliOperator e = PauliOperator::single(n, qb, kind);
                    const auto [sx, sz] = classical_syndrome(q, e);
                    ok &= (!sx.is_zero() || !sz.is_zero()) ||
                          q.stabilizer_contains(e.x_bits(), e.z_bits());
                }
            }
            rep.add_check("weight1-detection", ok);
        }
    }

    rep.elapsed_ms = timer.ms();
    return rep;
}

TrialStats monte_carlo(const QuantumCssCode& q, const DecoderTable& table, double error_prob,
                       long trials, uint64_t seed, int threads) {
    const Circuit encoder = build_encoder(q);
    const Circuit syndrome_circuit = build_syndrome_circuit(q);
    const FrequencyLayout& layout = *q.layout();
    const int n = q.qubits();
    const int kk = layout.num_check_qubits();
    const std::vector<int> msg = layout.message_qubits();
    const int t_radius = table.correction_radius();

    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    threads = int(std::min<long>(threads, std::max<long>(trials, 1)));

    std::vector<TrialStats> partial(threads);
    auto worker = [&](int widx) {
        TrialStats& st = partial[widx];
        for (long trial = widx; trial < trials; trial += threads) {
            std::mt19937_64 rng(trial_seed(seed, trial));
            std::vector<bool> jbits(msg.size());
            for (size_t t = 0; t < msg.size(); ++t) jbits[t] = rng() & 1u;

            StabilizerState s(syndrome_circuit.n_qubits);
            for (size_t t = 0; t < msg.size(); ++t) {
                if (jbits[t]) s.apply_x(msg[t]);
            }
            apply_data_circuit(s, encoder);

            // i.i.d. single-qubit depolarizing insertion.
            PauliOperator error(n);
            const char kinds[3] = {'X', 'Y', 'Z'};
            for (int qb = 0; qb < n; ++qb) {
                const double u = double(rng() >> 11) * 0x1.0p-53;
                if (u < error_prob) {
                    error = error.composed_with(PauliOperator::single(n, qb, kinds[rng() % 3]));
                }
            }
            const int weight = error.weight();
            s.apply_pauli(pad_error(error, syndrome_circuit.n_qubits));

            ExtractionResult ext = extract_syndrome(s, syndrome_circuit, n, kk, rng);
            if (!ext.deterministic) ++st.nondeterministic_readouts;
            const auto [cx, cz] = classical_syndrome(q, error);
            if (!(ext.s_x == cx && ext.s_z == cz)) ++st.syndrome_mismatches;

            ++st.trials;
            if (weight <= t_radius) ++st.weight_le_t;

            const auto corr = table.decode(ext.s_x, ext.s_z);
            if (!corr) {
                ++st.detected_uncorrectable;
                continue;
            }
            s.apply_pauli(pad_error(*corr, syndrome_circuit.n_qubits));

            // Success iff the residual error is a stabilizer element: both
            // halves inside the row space of G.
            BinaryVector rx = error.x_bits();
            rx.xor_in(corr->x_bits());
            BinaryVector rz = error.z_bits();
            rz.xor_in(corr->z_bits());
            const bool success = q.stabilizer_contains(rx, rz);
            if (success) {
                ++st.successes;
                if (weight <= t_radius) ++st.weight_le_t_successes;
            } else {
                ++st.failures;
            }

            // Periodic deep check: the tableau agrees with the classical
            // bookkeeping about restored stabilizer and logical-Z signs.
            if (trial % 997 == 0) {
                ++st.tableau_checks;
                bool ok = true;
                for (const auto& p : q.x_stabilizers()) {
                    ok &= s.is_stabilized_by(pad_error(p, syndrome_circuit.n_qubits)) ==
                          (rz.dot(p.x_bits()) == 0);
                }
                for (const auto& p : q.z_stabilizers()) {
                    ok &= s.is_stabilized_by(pad_error(p, syndrome_circuit.n_qubits)) ==
                          (rx.dot(p.z_bits()) == 0);
                }
                for (int t = 0; t < q.logical_qubits(); ++t) {
                    PauliOperator lz = q.logical_z()[t];
                    const int flips = rx.dot(lz.z_bits());
                    if (int(jbits[t]) ^ flips) lz.negate();
                    ok &= s.is_stabilized_by(pad_error(lz, syndrome_circuit.n_qubits));
                }
                if (!ok) ++st.tableau_check_failures;
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    TrialStats total;
    for (const TrialStats& st : partial) {
        total.trials += st.trials;
        total.successes += st.successes;
        total.detected_uncorrectable += st.detected_uncorrectable;
        total.failures += st.failures;
        total.weight_le_t += st.weight_le_t;
        total.weight_le_t_successes += st.weight_le_t_successes;
        total.nondeterministic_readouts += st.nondeterministic_readouts;
        total.syndrome_mismatches += st.syndrome_mismatches;
        total.tableau_checks += st.tableau_checks;
        total.tableau_check_failures += st.tableau_check_failures;
    }
    return total;
}

RunReport run_simulate(const SimulateOptions& opt) {
    Timer timer;
    RunReport rep;
    rep.command = "simulate";
    rep.add_param("k", std::to_string(opt.k));
    rep.add_param("delta", std::to_string(opt.delta));
    rep.add_param("p", std::to_string(opt.error_prob));
    rep.add_param("trials", std::to_string(opt.trials));
    rep.add_param("seed", std::to_string(opt.seed));
    if (opt.error_prob < 0.0 || opt.error_prob > 1.0) {
        throw std::invalid_argument("simulate: p must lie in [0, 1]");
    }
    if (opt.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");

    const QuantumCssCode q = build_quantum_rs(opt.k, opt.delta);
    rep.add_param("code", code_params_string(q));
    const int t = opt.t.value_or(default_correction_radius(q));
    rep.add_param("t", std::to_string(t));
    const DecoderTable table = build_decoder_table(q, t);

    const TrialStats st = monte_carlo(q, table, opt.error_prob, opt.trials, opt.seed, opt.threads);
    rep.add_count("trials", st.trials);
    rep.add_count("successes", st.successes);
    rep.add_count("detected_uncorrectable", st.detected_uncorrectable);
    rep.add_count("failures", st.failures);
    rep.add_count("weight_le_t", st.weight_le_t);
    rep.add_count("success_rate_ppm",
                  static_cast<long long>(1000000.0 * double(st.successes) / double(st.trials)));
    // Trials that did not end in a silent logical error: corrected, or
    // flagged detected-uncorrectable. Every weight <= t trial lands here.
    rep.add_count("no_silent_failure", st.trials - st.failures);
    rep.add_count("no_silent_failure_rate_ppm",
                  static_cast<long long>(1000000.0 * double(st.trials - st.failures) /
                                         double(st.trials)));

    rep.add_check("extraction-deterministic", st.nondeterministic_readouts == 0);
    rep.add_check("syndrome-cross-check", st.syndrome_mismatches == 0);
    rep.add_check("weight<=t-corrected", st.weight_le_t_successes == st.weight_le_t,
                  std::to_string(st.weight_le_t) + " light trials");
    rep.add_check("tableau-consistency", st.tableau_check_failures == 0,
                  std::to_string(st.tableau_checks) + " deep checks");
    if (opt.error_prob == 0.0) {
        rep.add_check("noiseless-success", st.successes == st.trials);
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

RunReport run_decode_table(const DecodeTableOptions& opt) {
    Timer timer;
    RunReport rep;
    rep.command = "decode-table";
    rep.add_param("k", std::to_string(opt.k));
    rep.add_param("delta", std::to_string(opt.delta));

    const QuantumCssCode q = build_quantum_rs(opt.k, opt.delta);
    rep.add_param("code", code_params_string(q));
    const int t = opt.t.value_or(default_correction_radius(q));
    rep.add_param("t", std::to_string(t));
    const DecoderTable table = build_decoder_table(q, t);
    rep.add_count("entries", static_cast<long long>(table.size()));
    rep.add_count("t", t);

    const int kk = q.stabilizer_matrix().rows();
    BinaryVector zero(kk);
    const auto id = table.decode(zero, zero);
    rep.add_check("zero-syndrome-identity", id.has_value() && id->is_identity());

    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out) throw std::runtime_error("cannot write table to '" + opt.out_path + "'");
        out << "# s_x s_z correction\n";
        // Deterministic dump: enumerate syndromes of weight <= t errors in
        // the same order the table was built.
        std::set<std::string> seen;
        auto dump = [&](const PauliOperator& e) {
            const auto [sx, sz] = classical_syndrome(q, e);
            const std::string key = sx.to_string() + " " + sz.to_string();
            if (!seen.insert(key).second) return;
            const auto corr = table.decode(sx, sz);
            out << key << " " << corr->label() << "\n";
        };
        dump(PauliOperator::identity(q.qubits()));
        const char kinds[3] = {'X', 'Z', 'Y'};
        if (t >= 1) {
            for (int qb = 0; qb < q.qubits(); ++qb) {
                for (char kind : kinds) dump(PauliOperator::single(q.qubits(), qb, kind));
            }
        }
        // Weight-2+ entries appear for larger radii.
        if (t >= 2) {
            for (int a = 0; a < q.qubits(); ++a) {
                for (int b = a + 1; b < q.qubits(); ++b) {
                    for (char ka : kinds) {
                        for (char kb : kinds) {
                            dump(PauliOperator::single(q.qubits(), a, ka)
                                     .composed_with(PauliOperator::single(q.qubits(), b, kb)));
                        }
                    }
                }
            }
        }
        if (!out.flush()) throw std::runtime_error("cannot write table to '" + opt.out_path + "'");
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

}  // namespace qrs
