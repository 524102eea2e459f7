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

#include "qepad/capi.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <span>
#include <string>

#include "qepad/cipher.hpp"
#include "qepad/harness.hpp"
#include "qepad/sources.hpp"

using namespace qepad;

struct qepad_state {
    DensityOperator rho;
};
struct qepad_params {
    CipherParams params;
};
struct qepad_channel {
    ChannelOutput out;
};

namespace {

thread_local std::string tls_last_error;

void set_error(const std::string& msg) { tls_last_error = msg; }

qepad_status status_of(const Error& e) {
    return static_cast<qepad_status>(static_cast<int>(e.code()));
}

// Runs fn, routing exceptions into the thread-local error slot.
template <typename Fn>
qepad_status guarded(Fn&& fn) {
    try {
        fn();
        return QEPAD_OK;
    } catch (const Error& e) {
        set_error(e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_error(e.what());
        return QEPAD_ERR_INTERNAL;
    }
}

template <typename Fn>
auto guarded_ptr(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        set_error(e.what());
        return nullptr;
    } catch (const std::exception& e) {
        set_error(e.what());
        return nullptr;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bool require(bool cond, const char* msg) {
    if (!cond)
        set_error(msg);
    return cond;
}

} // namespace

extern "C" {

const char* qepad_version(void) { return "0.1.0"; }

const char* qepad_last_error(void) { return tls_last_error.c_str(); }

void qepad_string_free(char* s) { std::free(s); }

/* ---- states ---------------------------------------------------------- */

qepad_state* qepad_state_maximally_mixed(int n_qubits) {
    return guarded_ptr([&]() -> qepad_state* {
        return new qepad_state{maximally_mixed(n_qubits)};
    });
}

qepad_state* qepad_state_from_diagonal(int n_qubits, const double* weights,
                                       size_t len) {
    if (!require(weights != nullptr, "weights is NULL"))
        return nullptr;
    return guarded_ptr([&]() -> qepad_state* {
        return new qepad_state{DensityOperator::from_diagonal(
            n_qubits, std::span<const double>(weights, len))};
    });
}

qepad_state* qepad_state_from_entries(int n_qubits, const double* re,
                                      const double* im) {
    if (!require(re != nullptr && im != nullptr, "entry array is NULL"))
        return nullptr;
    return guarded_ptr([&]() -> qepad_state* {
        if (n_qubits < 0 || n_qubits > 6)
            raise(ErrorCode::bad_parameters, "qubit count must be in [0, 6]");
        const std::size_t d = std::size_t{1} << n_qubits;
        CMat m(d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                m(r, c) = cplx(re[r * d + c], im[r * d + c]);
        return new qepad_state{DensityOperator::from_matrix(n_qubits, std::move(m))};
    });
}

qepad_state* qepad_state_random_source(int n_qubits, int t,
                                       const char* generator_kind, uint64_t seed) {
    if (!require(generator_kind != nullptr, "generator_kind is NULL"))
        return nullptr;
    return guarded_ptr([&]() -> qepad_state* {
        const auto kind = parse_source_kind(generator_kind);
        if (!kind)
            raise(ErrorCode::bad_parameters,
                  std::string("unknown generator kind '") + generator_kind + "'");
        return new qepad_state{random_t_source(n_qubits, t, *kind, seed)};
    });
}

qepad_state* qepad_state_clone(const qepad_state* s) {
    if (!require(s != nullptr, "state is NULL"))
        return nullptr;
    return new (std::nothrow) qepad_state{s->rho};
}

void qepad_state_free(qepad_state* s) { delete s; }

int qepad_state_qubits(const qepad_state* s) { return s ? s->rho.n_qubits() : -1; }

size_t qepad_state_dim(const qepad_state* s) { return s ? s->rho.dim() : 0; }

qepad_status qepad_state_entry(const qepad_state* s, size_t row, size_t col,
                               double* re, double* im) {
    if (!s || !re || !im) {
        set_error("NULL argument");
        return QEPAD_ERR_NULL_ARGUMENT;
    }
    return guarded([&] {
        if (row >= s->rho.dim() || col >= s->rho.dim())
            raise(ErrorCode::bad_parameters, "entry position out of range");
        const cplx v = s->rho.matrix()(row, col);
        *re = v.real();
        *im = v.imag();
    });
}

qepad_status qepad_state_trace_distance(const qepad_state* a, const qepad_state* b,
                                        double* out) {
    if (!a || !b || !out) {
        set_error("NULL argument");
        return QEPAD_ERR_NULL_ARGUMENT;
    }
    return guarded([&] { *out = trace_distance(a->rho, b->rho); });
}

qepad_status qepad_state_purity(const qepad_state* s, double* out) {
    if (!s || !out) {
        set_error("NULL argument");
        return QEPAD_ERR_NULL_ARGUMENT;
    }
    return guarded([&] { *out = purity(s->rho); });
}

qepad_status qepad_state_min_entropy(const qepad_state* s, double* out) {
    if (!s || !out) {
        set_error("NULL argument");
        return QEPAD_ERR_NULL_ARGUMENT;
    }
    return guarded([&] { *out = min_entropy(s->rho); });
}

/* ---- cipher ---------------------------------------------------------- */

qepad_params* qepad_params_new(int n_qubits, int key_bits) {
    return guarded_ptr([&]() -> qepad_params* {
        return new qepad_params{CipherParams::make(n_qubits, key_bits)};
    });
}

void qepad_params_free(qepad_params* p) { delete p; }

qepad_status qepad_key_length_required(int n_qubits, int t, double epsilon,
                                       int* out_bits) {
    if (!out_bits) {
        set_error("NULL argument");
        return QEPAD_ERR_NULL_ARGUMENT;
    }
    return guarded([&] { *out_bits = key_length_required(n_qubits, t, epsilon); });
}

qepad_state* qepad_encrypt(const qepad_state* s, const qepad_params* p,
                           uint64_t key, uint64_t index) {
    if (!require(s != nullptr && p != nullptr, "NULL argument"))
        return nullptr;
    return guarded_ptr([&]() -> qepad_state* {
        return new qepad_state{encrypt(s->rho, key, index, p->params).payload};
    });
}

qepad_state* qepad_decrypt(const qepad_state* s, const qepad_params* p,
                           uint64_t key, uint64_t index) {
    if (!require(s != nullptr && p != nullptr, "NULL argument"))
        return nullptr;
    return guarded_ptr([&]() -> qepad_state* {
        return new qepad_state{decrypt(Ciphertext{index, s->rho}, key, p->params)};
    });
}

qepad_channel* qepad_channel_compute(const qepad_state* s, const qepad_params* p) {
    if (!require(s != nullptr && p != nullptr, "NULL argument"))
        return nullptr;
    return guarded_ptr([&]() -> qepad_channel* {
        return new qepad_channel{avg_channel(s->rho, p->params)};
    });
}

void qepad_channel_free(qepad_channel* c) { delete c; }

size_t qepad_channel_block_count(const qepad_channel* c) {
    return c ? c->out.blocks.size() : 0;
}

qepad_state* qepad_channel_block(const qepad_channel* c, uint64_t index) {
    if (!require(c != nullptr, "channel is NULL"))
        return nullptr;
    return guarded_ptr(
        [&]() -> qepad_state* { return new qepad_state{c->out.block(index)}; });
}

qepad_status qepad_channel_indist_distance(const qepad_channel* c, double* out) {
    if (!c || !out) {
        set_error("NULL argument");
        return QEPAD_ERR_NULL_ARGUMENT;
    }
    return guarded([&] { *out = indist_distance(c->out); });
}

qepad_status qepad_channel_joint_purity(const qepad_channel* c, double* out) {
    if (!c || !out) {
        set_error("NULL argument");
        return QEPAD_ERR_NULL_ARGUMENT;
    }
    return guarded([&] { *out = joint_purity(c->out); });
}

qepad_status qepad_channel_implied_epsilon(const qepad_channel* c, double* out) {
    if (!c || !out) {
        set_error("NULL argument");
        return QEPAD_ERR_NULL_ARGUMENT;
    }
    return guarded([&] { *out = implied_epsilon(c->out); });
}

qepad_status qepad_purity_bound(const qepad_state* s, const qepad_params* p,
                                double* out) {
    if (!s || !p || !out) {
        set_error("NULL argument");
        return QEPAD_ERR_NULL_ARGUMENT;
    }
    return guarded([&] { *out = purity_bound(s->rho, p->params); });
}

/* ---- experiment harness ---------------------------------------------- */

char* qepad_sweep_run(const char* config_text, const char* out_csv_path,
                      int timings, int* all_pass) {
    if (!require(config_text != nullptr && out_csv_path != nullptr,
                 "NULL argument"))
        return nullptr;
    return guarded_ptr([&]() -> char* {
        SweepConfig cfg = parse_sweep_config(config_text);
        cfg.timings = timings != 0;
        const SweepResult res = run_sweep(cfg);
        std::ofstream file(out_csv_path, std::ios::binary);
        if (!file)
            raise(ErrorCode::io, std::string("cannot open '") + out_csv_path + "'");
        file << res.csv;
        file.close();
        if (!file)
            raise(ErrorCode::io, std::string("write failed for '") + out_csv_path + "'");
        if (all_pass)
            *all_pass = res.all_pass ? 1 : 0;
        return dup_string(res.summary);
    });
}

char* qepad_verify_family_report(int m, int* pass) {
    return guarded_ptr([&]() -> char* {
        const ReportResult res = verify_family_report(m);
        if (pass)
            *pass = res.pass ? 1 : 0;
        return dup_string(res.text);
    });
}

char* qepad_attack_report(const char* kind, const char* spec_text, uint64_t seed,
                          int* pass) {
    if (!require(kind != nullptr && spec_text != nullptr, "NULL argument"))
        return nullptr;
    return guarded_ptr([&]() -> char* {
        const ReportResult res = attack_report(kind, spec_text, seed);
        if (pass)
            *pass = res.pass ? 1 : 0;
        return dup_string(res.text);
    });
}

char* qepad_decompose_report(const char* weights_csv, int t, int* pass) {
    if (!require(weights_csv != nullptr, "NULL argument"))
        return nullptr;
    return guarded_ptr([&]() -> char* {
        const ReportResult res = decompose_report(weights_csv, t);
        if (pass)
            *pass = res.pass ? 1 : 0;
        return dup_string(res.text);
    });
}

char* qepad_channel_report(int n_qubits, int key_bits, const char* weights_csv,
                           int index_limit, int* pass) {
    if (!require(weights_csv != nullptr, "NULL argument"))
        return nullptr;
    return guarded_ptr([&]() -> char* {
        const ReportResult res =
            channel_report(n_qubits, key_bits, weights_csv, index_limit);
        if (pass)
            *pass = res.pass ? 1 : 0;
        return dup_string(res.text);
    });
}

} // extern "C"
