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

#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qrs/experiment.hpp"

namespace {

int emit_report(const qrs::RunReport& rep, const std::string& format) {
    if (format == "json") std::cout << rep.to_json() << "\n";
    else std::cout << rep.to_text();
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Reed-Solomon code toolkit: construction, circuit "
                 "synthesis, verification and error-correction experiments"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may appear after the subcommand

    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    qrs::CodeInfoOptions info_opt;
    qrs::EmitOptions emit_opt;
    qrs::VerifyOptions verify_opt;
    qrs::SimulateOptions sim_opt;
    qrs::DecodeTableOptions table_opt;
    int sim_t = -1, table_t = -1;

    auto add_kd = [](CLI::App* cmd, int& k, int& delta) {
        cmd->add_option("--k", k, "Extension degree of GF(2^k)")->required();
        cmd->add_option("--delta", delta, "Designed distance of the RS code")->required();
    };

    CLI::App* info = app.add_subcommand("code-info", "Report code parameters and basic checks");
    add_kd(info, info_opt.k, info_opt.delta);

    CLI::App* emit = app.add_subcommand("emit", "Write an encoder or syndrome circuit file");
    add_kd(emit, emit_opt.k, emit_opt.delta);
    emit->add_option("--what", emit_opt.what, "Circuit to emit")
        ->required()
        ->check(CLI::IsMember({"encoder", "syndrome"}));
    emit->add_option("--out", emit_opt.out_path, "Output file")->required();

    CLI::App* verify = app.add_subcommand("verify", "Run the property suite for one instance");
    add_kd(verify, verify_opt.k, verify_opt.delta);
    verify->add_option("--level", verify_opt.level, "Check depth")
        ->check(CLI::IsMember({"exhaustive", "quick"}));
    verify->add_option("--seed", verify_opt.seed, "Seed for sampled checks");

    CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo error-correction experiment");
    add_kd(sim, sim_opt.k, sim_opt.delta);
    sim->add_option("--p", sim_opt.error_prob, "Per-qubit depolarizing probability")->required();
    sim->add_option("--trials", sim_opt.trials, "Number of trials")->required();
    sim->add_option("--seed", sim_opt.seed, "Base seed");
    sim->add_option("--threads", sim_opt.threads, "Worker count (0 = auto)");
    sim->add_option("--t", sim_t, "Correction radius (default from the code distance)");

    CLI::App* table = app.add_subcommand("decode-table", "Build and inspect the decoder table");
    add_kd(table, table_opt.k, table_opt.delta);
    table->add_option("--t", table_t, "Correction radius (default from the code distance)");
    table->add_option("--out", table_opt.out_path, "Optional table dump file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) return emit_report(qrs::run_code_info(info_opt), format);
        if (*emit) return emit_report(qrs::run_emit(emit_opt), format);
        if (*verify) return emit_report(qrs::run_verify(verify_opt), format);
        if (*sim) {
            if (sim_t >= 0) sim_opt.t = sim_t;
            return emit_report(qrs::run_simulate(sim_opt), format);
        }
        if (*table) {
            if (table_t >= 0) table_opt.t = table_t;
            return emit_report(qrs::run_decode_table(table_opt), format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }
    return 2;
}
