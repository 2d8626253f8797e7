// Copyright 2026 The qmoney Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to qmoney. All objects are opaque handles owned by the caller
 * and released with the matching *_free function. Every call returns a
 * qm_status; on failure qm_last_error_message() describes the error (the
 * message is per-thread and valid until the next failing call on that
 * thread). Strings returned through char** are heap-allocated and must be
 * released with qm_string_free. Bit vectors cross the boundary as '0'/'1'
 * strings, coordinate 0 first. */

#ifndef QMONEY_QMONEY_H
#define QMONEY_QMONEY_H

#include <stddef.h>
#include <stdint.h>

#if defined(QMONEY_BUILDING_LIBRARY)
#define QM_API __attribute__((visibility("default")))
#else
#define QM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qm_status {
    QM_OK = 0,
    QM_ERR_INVALID_ARGUMENT = 1,
    QM_ERR_NOT_FOUND = 2,
    QM_ERR_UNDECODABLE = 3,
    QM_ERR_UNKNOWN_SERIAL = 4,
    QM_ERR_BUDGET = 5,
    QM_ERR_PARSE = 6,
    QM_ERR_IO = 7,
    QM_ERR_INTERNAL = 8
} qm_status;

typedef enum qm_route { QM_ROUTE_DIRECT = 0, QM_ROUTE_CONJUGATE = 1 } qm_route;

typedef struct qm_code qm_code;
typedef struct qm_bank qm_bank;
typedef struct qm_note qm_note;

QM_API const char *qm_version(void);
QM_API const char *qm_status_name(qm_status status);
QM_API const char *qm_last_error_message(void);
QM_API void qm_string_free(char *s);

/* ---- codes ---- */

typedef struct qm_code_info {
    size_t n;
    size_t q;
    size_t dim;
    size_t dual_dim;
    size_t d_primal;
    size_t d_dual;
    int certified; /* 1 iff the code is an applicable CSS code for (n, q) */
} qm_code_info;

/* Randomized search for an applicable code; QM_ERR_NOT_FOUND when the
 * attempt budget runs out. max_attempts = 0 selects the default. */
QM_API qm_status qm_code_search(size_t n, size_t q, uint64_t seed, size_t max_attempts, unsigned jobs,
                                qm_code **out);
/* Span of the given generator rows, separated by commas or whitespace. */
QM_API qm_status qm_code_from_rows(const char *rows, size_t q, qm_code **out);
QM_API qm_status qm_code_from_json(const char *json, qm_code **out);
QM_API qm_status qm_code_to_json(const qm_code *code, char **out);
QM_API qm_status qm_code_info_get(const qm_code *code, qm_code_info *out);
/* One-line certificate summary, e.g. "pass d=3/3". */
QM_API qm_status qm_code_certify(const qm_code *code, int *passed, char **summary);
/* Newline-separated codewords in lexicographic order. */
QM_API qm_status qm_code_codewords(const qm_code *code, char **out);
/* The subspace state in the "<bits> <re> <im>" dump format. */
QM_API qm_status qm_code_state_dump(const qm_code *code, char **out);
QM_API void qm_code_free(qm_code *code);

/* ---- bank ---- */

/* fixed_code may be NULL, in which case each record searches its own code. */
QM_API qm_status qm_bank_create(size_t n, size_t q, uint64_t master_seed, qm_route route, const qm_code *fixed_code,
                                unsigned jobs, qm_bank **out);
QM_API void qm_bank_free(qm_bank *bank);
QM_API qm_status qm_bank_from_json(const char *json, qm_bank **out);
QM_API qm_status qm_bank_to_json(const qm_bank *bank, char **out);
QM_API qm_status qm_bank_num_qubits(const qm_bank *bank, size_t *out);
QM_API qm_status qm_bank_num_records(const qm_bank *bank, size_t *out);
QM_API qm_status qm_bank_route(const qm_bank *bank, qm_route *out);

/* Mints the banknote for r. r_bits = NULL derives r from r_seed. x_bits is
 * only meaningful on the conjugate route (NULL means x = 0); x != 0 needs
 * test_mode. symbolic = 1 stores a coset label instead of amplitudes
 * (direct route only). */
QM_API qm_status qm_bank_mint(qm_bank *bank, const char *r_bits, uint64_t r_seed, const char *x_bits, int test_mode,
                              int symbolic, qm_note **out);

typedef struct qm_verify_result {
    int serial_valid;
    int accepted; /* sampled decision */
    double accept_probability;
    uint64_t serial_queries;
    uint64_t primal_queries;
    uint64_t dual_queries;
    char reason[64];
} qm_verify_result;

/* An unknown serial is a rejection, not an error: QM_OK with
 * serial_valid = 0 and reason "unknown serial". */
QM_API qm_status qm_bank_verify(const qm_bank *bank, const qm_note *note, uint64_t seed, qm_verify_result *out);

typedef struct qm_correct_result {
    qm_note *note; /* corrected note, owned by the caller */
    char *e;       /* identified bit-flip pattern */
    char *e_prime; /* identified phase-flip pattern */
    uint64_t coset_queries;
} qm_correct_result;

/* QM_ERR_UNDECODABLE when no tolerated coset matches; *out is then zeroed. */
QM_API qm_status qm_bank_correct(const qm_bank *bank, const qm_note *note, qm_correct_result *out);
QM_API void qm_correct_result_clear(qm_correct_result *result);

/* |<fresh note for this serial | note>|^2. */
QM_API qm_status qm_bank_fresh_fidelity(const qm_bank *bank, const qm_note *note, double *out);

/* ---- notes ---- */

QM_API qm_status qm_note_from_json(const char *json, qm_note **out);
QM_API qm_status qm_note_to_json(const qm_note *note, char **out);
QM_API qm_status qm_note_serial(const qm_note *note, char **out);
QM_API qm_status qm_note_num_qubits(const qm_note *note, size_t *out);
QM_API qm_status qm_note_is_symbolic(const qm_note *note, int *out);
/* X^e Z^e_prime applied to the note. NULL means the zero pattern. */
QM_API qm_status qm_note_corrupt(const qm_note *note, const char *e, const char *e_prime, qm_note **out);
/* Uniformly random e and e_prime of exact weight `weight` each. The chosen
 * patterns are returned through e_out/e_prime_out when non-NULL. */
QM_API qm_status qm_note_corrupt_random(const qm_note *note, size_t weight, uint64_t seed, qm_note **out,
                                        char **e_out, char **e_prime_out);
QM_API void qm_note_free(qm_note *note);

/* ---- experiments ---- */

/* Reports come back as CSV text plus the canonical file name. */
QM_API qm_status qm_labx_attack(qm_bank *bank, const char *strategy, uint64_t trials, uint64_t seed, char **csv,
                                char **file_name);
QM_API qm_status qm_labx_completeness(const qm_code *code, size_t *rows, double *min_probability, char **csv,
                                      char **file_name);
QM_API qm_status qm_labx_gv_table(size_t n_min, size_t n_max, const size_t *qs, size_t num_qs, char **csv,
                                  char **file_name);
QM_API qm_status qm_labx_soundness_table(size_t n_min, size_t n_max, const size_t *qs, size_t num_qs, char **csv,
                                         char **file_name);
QM_API qm_status qm_labx_gv_margin(size_t n, size_t q, double *out);
QM_API qm_status qm_labx_error_pairs(size_t n, size_t q, uint64_t *out);
/* Evaluates log(1/delta) / (sqrt(eps) (sqrt(eps) + delta^2)), the argument
 * of an asymptotic bound; constant factor 1. */
QM_API qm_status qm_labx_amplification_cost(double epsilon, double delta, double *out);

#ifdef __cplusplus
}
#endif

#endif
