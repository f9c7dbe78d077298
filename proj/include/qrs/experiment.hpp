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
#include <utility>
#include <vector>

#include "qrs/circuits.hpp"
#include "qrs/css.hpp"
#include "qrs/simulator.hpp"

namespace qrs {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Outcome of one command run: parameter echo, per-check pass/fail, counters
/// and timing. Renders as plain text or as a single JSON object; the process
/// exit status is 0 iff all checks pass.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, long long>> counts;
    std::string description;  // optional verbatim block (e.g. stabilizer rows)
    double elapsed_ms = 0.0;

    void add_param(const std::string& key, const std::string& value);
    void add_check(const std::string& name, bool pass, const std::string& detail = "");
    void add_count(const std::string& key, long long value);
    bool all_pass() const;

    std::string to_text() const;
    std::string to_json() const;
};

struct CodeInfoOptions {
    int k = 0;
    int delta = 0;
};
RunReport run_code_info(const CodeInfoOptions& opt);

struct EmitOptions {
    int k = 0;
    int delta = 0;
    std::string what;  // "encoder" or "syndrome"
    std::string out_path;
};
RunReport run_emit(const EmitOptions& opt);

struct VerifyOptions {
    int k = 0;
    int delta = 0;
    std::string level = "exhaustive";  // or "quick"
    uint64_t seed = 1;
};
RunReport run_verify(const VerifyOptions& opt);

struct SimulateOptions {
    int k = 0;
    int delta = 0;
    double error_prob = 0.0;
    long trials = 1;
    uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
    std::optional<int> t;
};
RunReport run_simulate(const SimulateOptions& opt);

struct DecodeTableOptions {
    int k = 0;
    int delta = 0;
    std::optional<int> t;
    std::string out_path;
};
RunReport run_decode_table(const DecodeTableOptions& opt);

/// Aggregate Monte Carlo outcome; deterministic for a fixed seed regardless
/// of the worker count (per-trial seeds are derived from (seed, index)).
struct TrialStats {
    long trials = 0;
    long successes = 0;
    long detected_uncorrectable = 0;
    long failures = 0;
    long weight_le_t = 0;
    long weight_le_t_successes = 0;
    long nondeterministic_readouts = 0;
    long syndrome_mismatches = 0;
    long tableau_checks = 0;
    long tableau_check_failures = 0;
};

TrialStats monte_carlo(const QuantumCssCode& q, const DecoderTable& table, double error_prob,
                       long trials, uint64_t seed, int threads = 0);

}  // namespace qrs
