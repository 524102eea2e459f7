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

// Experiment harness behind the CLI: parameter sweeps with deterministic
// CSV output, family verification, attack demos and flat-decomposition
// reports. Everything is a function of (config bytes, seed) so repeated
// runs are byte-identical unless timings are explicitly requested.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qepad/sources.hpp"

namespace qepad {

struct SweepConfig {
    std::vector<int> n_list;
    std::vector<int> t_list;
    std::vector<int> tk_list;  ///< ignored when tk_required is set
    bool tk_required = false;  ///< t_k = key_length_required(n, t, eps)
    std::vector<double> epsilon_list;
    std::vector<SourceKind> generators = {kAllSourceKinds[0], kAllSourceKinds[1],
                                          kAllSourceKinds[2], kAllSourceKinds[3]};
    int sources_per_cell = 1;
    std::uint64_t seed = 0;
    bool timings = false; ///< CLI flag, not a config key; breaks byte-determinism
};

/// Parses the key=value sweep format (lists comma-separated, '#' comments).
SweepConfig parse_sweep_config(const std::string& text);

struct SweepResult {
    std::string csv;     ///< header comment + header row + one row per source
    std::string summary; ///< per-cell max observed distance
    bool all_pass = true;
};

/// Runs every (n, t, t_k, epsilon) cell; cells with t > n are skipped,
/// cells with t_k > 2n are rejected. Rows appear in deterministic
/// (cell, source) order.
SweepResult run_sweep(const SweepConfig& cfg);

struct ReportResult {
    std::string text;
    bool pass = true;
};

/// Family verification for width m: exact key-averaged offset bound,
/// the literal fixed-pair worst case, and an exhaustive bijectivity check.
ReportResult verify_family_report(int m);

/// Attack demo. kind is "helstrom" (binary predicate, optimal
/// discriminator) or "gl" (multi-bit function table reduced to a
/// predicate). The instance spec uses the same key=value format.
ReportResult attack_report(const std::string& kind, const std::string& spec_text,
                           std::uint64_t seed);

/// Greedy flat decomposition of a weight literal such as "0.5,0.25,0.25,0".
ReportResult decompose_report(const std::string& weights_literal, int t);

/// Per-block channel distances for a diagonal source; prints at most
/// index_limit blocks but always computes the full channel.
ReportResult channel_report(int n_qubits, int key_bits,
                            const std::string& weights_literal, int index_limit);

/// Comma-separated decimal weights.
std::vector<double> parse_weights_literal(const std::string& literal);

} // namespace qepad
