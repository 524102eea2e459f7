// Copyright 2026 The qepad developers
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

// Experiment CLI over the qepad C API. Exit codes: 0 when every asserted
// bound passed, 1 when a bound failed, 2 on usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qepad/capi.h"

namespace {

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    ok = true;
    return buf.str();
}

int finish(char* report, int pass) {
    if (!report)
        return fail_usage(qepad_last_error());
    std::cout << report;
    qepad_string_free(report);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropic Pauli-pad experiment harness"};
    app.require_subcommand(1);

    // sweep
    std::string sweep_config, sweep_out;
    bool sweep_timings = false;
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep to CSV");
    sweep->add_option("--config", sweep_config, "config file (key = value lines)")
        ->required();
    sweep->add_option("--out", sweep_out, "output CSV path")->required();
    sweep->add_flag("--timings", sweep_timings,
                    "fill runtime_ms with measured times (output is then not "
                    "byte-reproducible)");

    // verify-family
    int family_m = 0;
    auto* family = app.add_subcommand("verify-family",
                                      "verify the XOR-universal mask family");
    family->add_option("--m", family_m, "domain width in bits (even, 2..12)")
        ->required();

    // attack
    std::string attack_kind, attack_spec;
    std::uint64_t attack_seed = 0;
    auto* attack = app.add_subcommand("attack", "run an attack demo");
    attack->add_option("--kind", attack_kind, "helstrom | gl")->required();
    attack->add_option("--spec", attack_spec, "instance spec file")->required();
    attack->add_option("--seed", attack_seed, "seed for the random-POVM sweep");

    // decompose
    std::string dec_weights;
    int dec_t = 0;
    auto* decompose =
        app.add_subcommand("decompose", "flat-source decomposition of weights");
    decompose->add_option("--weights", dec_weights, "comma-separated weights")
        ->required();
    decompose->add_option("--t", dec_t, "flatness parameter (2^t-point sources)")
        ->required();

    // channel
    int ch_n = 0, ch_tk = 0, ch_limit = 0;
    std::string ch_source;
    auto* channel =
        app.add_subcommand("channel", "per-block distances of the averaged channel");
    channel->add_option("--n", ch_n, "message qubits")->required();
    channel->add_option("--t-k", ch_tk, "key bits")->required();
    channel->add_option("--source", ch_source, "diagonal source weights")->required();
    channel->add_option("--index-limit", ch_limit,
                        "print at most this many blocks (0 = all)");

    CLI11_PARSE(app, argc, argv);

    if (sweep->parsed()) {
        bool ok = false;
        const std::string config = read_file(sweep_config, ok);
        if (!ok)
            return fail_usage("cannot read config file '" + sweep_config + "'");
        int all_pass = 0;
        char* summary = qepad_sweep_run(config.c_str(), sweep_out.c_str(),
                                        sweep_timings ? 1 : 0, &all_pass);
        if (!summary)
            return fail_usage(qepad_last_error());
        std::cout << summary;
        qepad_string_free(summary);
        std::cout << "csv written to " << sweep_out << "\n";
        return all_pass ? 0 : 1;
    }
    if (family->parsed()) {
        int pass = 0;
        char* report = qepad_verify_family_report(family_m, &pass);
        return finish(report, pass);
    }
    if (attack->parsed()) {
        bool ok = false;
        const std::string spec = read_file(attack_spec, ok);
        if (!ok)
            return fail_usage("cannot read spec file '" + attack_spec + "'");
        int pass = 0;
        char* report =
            qepad_attack_report(attack_kind.c_str(), spec.c_str(), attack_seed, &pass);
        return finish(report, pass);
    }
    if (decompose->parsed()) {
        int pass = 0;
        char* report = qepad_decompose_report(dec_weights.c_str(), dec_t, &pass);
        return finish(report, pass);
    }
    if (channel->parsed()) {
        int pass = 0;
        char* report =
            qepad_channel_report(ch_n, ch_tk, ch_source.c_str(), ch_limit, &pass);
        return finish(report, pass);
    }
    return fail_usage("no subcommand");
}
