/* Copyright 2026 The qepad developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the qepad shared library.
 *
 * Handles are opaque; functions that can fail either return NULL (handle
 * constructors) or a qepad_status. The message for the most recent error
 * on the calling thread is available via qepad_last_error(). Strings
 * returned as char* are owned by the caller and released with
 * qepad_string_free().
 */

#ifndef QEPAD_CAPI_H
#define QEPAD_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qepad_status {
    QEPAD_OK = 0,
    QEPAD_ERR_INTERNAL = 1,
    QEPAD_ERR_NON_HERMITIAN = 2,
    QEPAD_ERR_NO_CONVERGENCE = 3,
    QEPAD_ERR_DIMENSION_MISMATCH = 4,
    QEPAD_ERR_LENGTH_MISMATCH = 5,
    QEPAD_ERR_ZERO_INDEX = 6,
    QEPAD_ERR_DOMAIN_TOO_LARGE = 7,
    QEPAD_ERR_ENTROPY_TOO_LOW = 8,
    QEPAD_ERR_MASS_NOT_NORMALIZED = 9,
    QEPAD_ERR_BAD_PARAMETERS = 10,
    QEPAD_ERR_BAD_KEY = 11,
    QEPAD_ERR_BAD_INDEX = 12,
    QEPAD_ERR_LABEL_MISMATCH = 13,
    QEPAD_ERR_NO_WITNESS = 14,
    QEPAD_ERR_CONSTANT_PREDICATE = 15,
    QEPAD_ERR_CONFIG_PARSE = 16,
    QEPAD_ERR_IO = 17,
    QEPAD_ERR_NULL_ARGUMENT = 18
} qepad_status;

typedef struct qepad_state qepad_state;     /* density operator */
typedef struct qepad_params qepad_params;   /* cipher parameters */
typedef struct qepad_channel qepad_channel; /* averaged channel output */

const char* qepad_version(void);
/* Message of the last error raised on this thread ("" if none). */
const char* qepad_last_error(void);
void qepad_string_free(char* s);

/* ---- states ---------------------------------------------------------- */

qepad_state* qepad_state_maximally_mixed(int n_qubits);
qepad_state* qepad_state_from_diagonal(int n_qubits, const double* weights,
                                       size_t len);
/* Row-major dim*dim entries; validates Hermiticity, trace and positivity. */
qepad_state* qepad_state_from_entries(int n_qubits, const double* re,
                                      const double* im);
/* generator_kind: flat-random-support | random-diagonal |
 * random-unitary-conjugated | adversarial-near-threshold */
qepad_state* qepad_state_random_source(int n_qubits, int t,
                                       const char* generator_kind, uint64_t seed);
qepad_state* qepad_state_clone(const qepad_state* s);
void qepad_state_free(qepad_state* s);

int qepad_state_qubits(const qepad_state* s);
size_t qepad_state_dim(const qepad_state* s);
qepad_status qepad_state_entry(const qepad_state* s, size_t row, size_t col,
                               double* re, double* im);
qepad_status qepad_state_trace_distance(const qepad_state* a, const qepad_state* b,
                                        double* out);
qepad_status qepad_state_purity(const qepad_state* s, double* out);
qepad_status qepad_state_min_entropy(const qepad_state* s, double* out);

/* ---- cipher ---------------------------------------------------------- */

qepad_params* qepad_params_new(int n_qubits, int key_bits);
void qepad_params_free(qepad_params* p);
qepad_status qepad_key_length_required(int n_qubits, int t, double epsilon,
                                       int* out_bits);

/* Payload of the ciphertext for (key, index); index runs over 1..4^n-1. */
qepad_state* qepad_encrypt(const qepad_state* s, const qepad_params* p,
                           uint64_t key, uint64_t index);
qepad_state* qepad_decrypt(const qepad_state* s, const qepad_params* p,
                           uint64_t key, uint64_t index);

qepad_channel* qepad_channel_compute(const qepad_state* s, const qepad_params* p);
void qepad_channel_free(qepad_channel* c);
size_t qepad_channel_block_count(const qepad_channel* c);
qepad_state* qepad_channel_block(const qepad_channel* c, uint64_t index);
qepad_status qepad_channel_indist_distance(const qepad_channel* c, double* out);
qepad_status qepad_channel_joint_purity(const qepad_channel* c, double* out);
qepad_status qepad_channel_implied_epsilon(const qepad_channel* c, double* out);
qepad_status qepad_purity_bound(const qepad_state* s, const qepad_params* p,
                                double* out);

/* ---- experiment harness ---------------------------------------------- */

/* Runs the sweep described by config_text, writes the CSV to out_csv_path
 * and returns the per-cell summary. all_pass is set to 1 iff every row
 * met its epsilon target and every internal bound held. timings != 0
 * fills the runtime_ms column with measured times (and gives up on
 * byte-identical reruns). */
char* qepad_sweep_run(const char* config_text, const char* out_csv_path,
                      int timings, int* all_pass);
char* qepad_verify_family_report(int m, int* pass);
/* kind: "helstrom" | "gl" */
char* qepad_attack_report(const char* kind, const char* spec_text, uint64_t seed,
                          int* pass);
char* qepad_decompose_report(const char* weights_csv, int t, int* pass);
char* qepad_channel_report(int n_qubits, int key_bits, const char* weights_csv,
                           int index_limit, int* pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QEPAD_CAPI_H */
