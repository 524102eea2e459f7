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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "qepad/harness.hpp"

using namespace qepad;

namespace {

const char* kSmallConfig =
    "# demo sweep\n"
    "n = 1,2\n"
    "t = 0,1,2\n"
    "t_k = required\n"
    "epsilon = 0.5,0.25\n"
    "generators = flat,diagonal,unitary,threshold\n"
    "sources_per_cell = 4\n"
    "seed = 99\n";

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        n += c == '\n' ? 1 : 0;
    return n;
}

} // namespace

TEST_CASE("config parsing: round trip of a full config") {
    const SweepConfig cfg = parse_sweep_config(kSmallConfig);
    CHECK(cfg.n_list == std::vector<int>{1, 2});
    CHECK(cfg.t_list == std::vector<int>{0, 1, 2});
    CHECK(cfg.tk_required);
    CHECK(cfg.epsilon_list == std::vector<double>{0.5, 0.25});
    CHECK(cfg.generators.size() == 4);
    CHECK(cfg.sources_per_cell == 4);
    CHECK(cfg.seed == 99);
}

TEST_CASE("config parsing: errors") {
    CHECK_THROWS_AS(parse_sweep_config("n = 1\n"), Error);        // missing keys
    CHECK_THROWS_AS(parse_sweep_config("bogus\n"), Error);        // no equals
    CHECK_THROWS_AS(parse_sweep_config("n = 1\nt = 0\nt_k = x\nepsilon = 0.5\n"),
                    Error);
    CHECK_THROWS_AS(
        parse_sweep_config("n = 9\nt = 0\nt_k = 0\nepsilon = 0.5\n"), Error);
    CHECK_THROWS_AS(
        parse_sweep_config("n = 1\nt = 0\nt_k = 0\nepsilon = 2.0\n"), Error);
    CHECK_THROWS_AS(
        parse_sweep_config("n = 1\nt = 0\nt_k = 0\nepsilon = 0.5\nwhat = 1\n"),
        Error);
    // t_k beyond 2n is rejected at cell expansion.
    CHECK_THROWS_AS(
        run_sweep(parse_sweep_config("n = 1\nt = 0\nt_k = 3\nepsilon = 0.5\n")),
        Error);
}

TEST_CASE("sweep: deterministic bytes, row counts, cell skipping") {
    const SweepConfig cfg = parse_sweep_config(kSmallConfig);
    const SweepResult a = run_sweep(cfg);
    const SweepResult b = run_sweep(cfg);
    CHECK(a.csv == b.csv);         // byte-identical
    CHECK(a.summary == b.summary);
    CHECK(a.all_pass);

    // Cells: n=1 has t in {0,1}, n=2 has t in {0,1,2}; each with 2 epsilon
    // values; 4 sources per cell. Plus comment and header lines.
    const std::size_t cells = (2 + 3) * 2;
    CHECK(count_lines(a.csv) == 2 + cells * 4);
    CHECK(a.csv.find("# rng=mt19937_64 seed=99") == 0);
    CHECK(a.csv.find("n,t,t_k,epsilon_target,seed,source_id,generator_kind,"
                     "trace_distance,joint_purity,purity_bound,implied_epsilon,"
                     "pass,runtime_ms") != std::string::npos);

    // Untimed rows end with ",0".
    std::istringstream lines(a.csv);
    std::string line;
    std::getline(lines, line); // comment
    std::getline(lines, line); // header
    while (std::getline(lines, line))
        CHECK(line.substr(line.size() - 2) == ",0");
}

TEST_CASE("sweep: full-key and forced-mixed cells sit at zero distance") {
    // n=1 with t_k = 2 is an exact one-time pad; n=2 with t = 2 forces
    // the source itself to be I/4.
    const SweepConfig cfg = parse_sweep_config(
        "n = 1,2\nt = 0,2\nt_k = 2\nepsilon = 0.5\nsources_per_cell = 6\n"
        "seed = 17\n");
    const SweepResult res = run_sweep(cfg);
    CHECK(res.all_pass);
    std::istringstream lines(res.csv);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string field, n_field, t_field;
        std::getline(cells, n_field, ',');
        std::getline(cells, t_field, ',');
        for (int i = 2; i < 8; ++i)
            std::getline(cells, field, ',');
        const double dist = std::stod(field);
        if (n_field == "1")
            CHECK(dist <= 1e-10); // full keys for one qubit
        if (n_field == "2" && t_field == "2")
            CHECK(dist == 0.0); // the only 2-source on two qubits is I/4
    }
}

TEST_CASE("sweep: under-keyed cells fail their epsilon target") {
    const SweepConfig cfg = parse_sweep_config(
        "n = 1\nt = 0\nt_k = 0\nepsilon = 0.25\ngenerators = threshold\n"
        "sources_per_cell = 3\nseed = 7\n");
    const SweepResult res = run_sweep(cfg);
    CHECK_FALSE(res.all_pass);
    CHECK(res.summary.find("FAIL") != std::string::npos);
}

TEST_CASE("sweep: monotone distance along the key column") {
    const SweepConfig cfg = parse_sweep_config(
        "n = 2\nt = 1\nt_k = 0,1,2,3,4\nepsilon = 1.0\n"
        "generators = diagonal\nsources_per_cell = 1\nseed = 31\n");
    const SweepResult res = run_sweep(cfg);
    // Within the (n, t, source) group the distance must not grow with t_k.
    std::istringstream lines(res.csv);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    double prev = 2.0;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string field;
        for (int i = 0; i < 8; ++i)
            std::getline(cells, field, ',');
        const double dist = std::stod(field);
        CHECK(dist <= prev + 1e-12);
        prev = dist;
    }
}

TEST_CASE("family report: passing widths and the domain guard") {
    for (int m : {2, 4}) {
        const ReportResult rep = verify_family_report(m);
        CHECK(rep.pass);
        CHECK(rep.text.find("PASS") != std::string::npos);
        CHECK(rep.text.find("literal fixed-pair worst case") != std::string::npos);
    }
    CHECK_THROWS_AS(verify_family_report(14), Error);
    CHECK_THROWS_AS(verify_family_report(3), Error);
}

TEST_CASE("attack report: helstrom on the unkeyed one-qubit instance") {
    const ReportResult rep = attack_report(
        "helstrom", "n = 1\nt_k = 0\nweights = 0.5,0.5\nf = 0,1\n", 5);
    CHECK(rep.pass);
    // The gap line reports 0.5 for this instance.
    CHECK(rep.text.find("prediction gap of the Helstrom adversary: 0.5") !=
          std::string::npos);
    CHECK(rep.text.find("breaks epsilon-security") != std::string::npos);
}

TEST_CASE("attack report: helstrom on a fully keyed instance reports no gap") {
    const ReportResult rep = attack_report(
        "helstrom", "n = 1\nt_k = 2\nweights = 0.5,0.5\nf = 0,1\n", 5);
    CHECK(rep.pass);
    const auto at = rep.text.find("prediction gap of the Helstrom adversary: ");
    REQUIRE(at != std::string::npos);
    const double gap = std::stod(rep.text.substr(
        at + std::string("prediction gap of the Helstrom adversary: ").size()));
    CHECK(gap <= 1e-10);
    CHECK(rep.text.find("breaks epsilon-security") == std::string::npos);
}

TEST_CASE("attack report: goldreich-levin reduction on a 2-bit table") {
    const ReportResult rep =
        attack_report("gl", "n = 2\nt_k = 0\nf = 0,1,2,3\n", 5);
    CHECK(rep.pass);
    CHECK(rep.text.find("requirement gap/2") != std::string::npos);
    CHECK(rep.text.find("met") != std::string::npos);
}

TEST_CASE("attack report: input validation") {
    CHECK_THROWS_AS(attack_report("helstrom", "n = 1\n", 0), Error);
    CHECK_THROWS_AS(attack_report("nope", "n = 1\nt_k = 0\nf = 0,1\n", 0), Error);
    CHECK_THROWS_AS(
        attack_report("helstrom", "n = 1\nt_k = 0\nf = 0,3\n", 0), Error);
    CHECK_THROWS_AS(
        attack_report("helstrom", "n = 1\nt_k = 0\nweights = 0.9,0.2\nf = 0,1\n", 0),
        Error);
}

TEST_CASE("decompose report: worked example and the entropy guard") {
    const ReportResult rep = decompose_report("0.5,0.25,0.25,0", 1);
    CHECK(rep.pass);
    CHECK(rep.text.find("0.5 * flat{0,1}") != std::string::npos);
    CHECK(rep.text.find("0.5 * flat{0,2}") != std::string::npos);

    const ReportResult single = decompose_report("0.25,0.25,0.25,0.25", 2);
    CHECK(single.pass);
    CHECK(single.text.find("1 flat source(s)") != std::string::npos);

    CHECK_THROWS_AS(decompose_report("0.6,0.4", 1), Error);
    CHECK_THROWS_AS(decompose_report("0.6,0.4x", 1), Error);
}

TEST_CASE("channel report: per-block lines and the bound checks") {
    const ReportResult rep = channel_report(1, 0, "1,0", 2);
    CHECK(rep.pass);
    CHECK(rep.text.find("block 1: distance 0.5") != std::string::npos);
    CHECK(rep.text.find("block 2: distance 0.5") != std::string::npos);
    CHECK(rep.text.find("... (1 more blocks)") != std::string::npos);
    CHECK(rep.text.find("channel distance from maximally mixed: 0.5") !=
          std::string::npos);

    const ReportResult full = channel_report(1, 2, "1,0", 0);
    CHECK(full.pass);
    CHECK(full.text.find("channel distance from maximally mixed: 0\n") !=
          std::string::npos);
}

TEST_CASE("weights literal parsing") {
    CHECK(parse_weights_literal("0.5, 0.25 ,0.25,0") ==
          std::vector<double>{0.5, 0.25, 0.25, 0.0});
    CHECK_THROWS_AS(parse_weights_literal(""), Error);
    CHECK_THROWS_AS(parse_weights_literal("a,b"), Error);
}
