// Copyright 2026 The qtk Authors
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

/* C interface to the qtk simulator and synthesis toolkit.
 *
 * Objects are opaque handles created by qtk_*_create/parse functions and
 * released with the matching *_destroy. Every fallible call returns a
 * qtk_status; on failure qtk_last_error() describes the problem for the
 * calling thread. Strings returned through char** are owned by the caller
 * and must be released with qtk_string_free().
 */

#ifndef QTK_QTK_H_
#define QTK_QTK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QTK_BUILDING_LIBRARY)
#define QTK_API __declspec(dllexport)
#else
#define QTK_API __declspec(dllimport)
#endif
#else
#define QTK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtk_status {
  QTK_OK = 0,
  QTK_ERR_DOMAIN = 1,       /* argument outside the operation's domain */
  QTK_ERR_VALIDATION = 2,   /* structured input failed validation */
  QTK_ERR_INVARIANT = 3,    /* runtime invariant broken (e.g. dirty ancilla) */
  QTK_ERR_PRECONDITION = 4, /* caller-supplied register not in the required state */
  QTK_ERR_PARSE = 5,        /* malformed JSON or unknown name */
  QTK_ERR_NULL_ARGUMENT = 6,
  QTK_ERR_INTERNAL = 7
} qtk_status;

typedef struct qtk_state qtk_state;
typedef struct qtk_spec qtk_spec;

typedef struct qtk_report {
  int64_t oracle_calls;
  int64_t ancilla_qubits;
  int64_t elementary_ops;
  int64_t measurements;
  int64_t modeled_block_cost;
} qtk_report;

/* Message for the last failed call on this thread ("" if none). */
QTK_API const char *qtk_last_error(void);
QTK_API const char *qtk_status_name(qtk_status status);
QTK_API const char *qtk_version(void);
QTK_API void qtk_string_free(char *text);

/* ---- states ---- */

QTK_API qtk_status qtk_state_basis(int num_qubits, uint64_t index, qtk_state **out);
/* Independent complex Gaussian amplitudes, normalized. */
QTK_API qtk_status qtk_state_random(int num_qubits, uint64_t seed, qtk_state **out);
/* re_im holds 2 * dim doubles (re0, im0, re1, im1, ...); must be normalized. */
QTK_API qtk_status qtk_state_from_amplitudes(const double *re_im, size_t dim, qtk_state **out);
QTK_API void qtk_state_destroy(qtk_state *state);
QTK_API qtk_status qtk_state_num_qubits(const qtk_state *state, int *out);
QTK_API qtk_status qtk_state_dim(const qtk_state *state, size_t *out);
/* Copies the amplitudes into re_im, which must hold 2 * dim doubles. */
QTK_API qtk_status qtk_state_amplitudes(const qtk_state *state, double *re_im, size_t capacity);
/* |<a|b>|. */
QTK_API qtk_status qtk_state_fidelity(const qtk_state *a, const qtk_state *b, double *out);

/* ---- method specs ---- */

/* n_override <= 0 keeps the spec's own "n". */
QTK_API qtk_status qtk_spec_parse(const char *json, int n_override, qtk_spec **out);
QTK_API void qtk_spec_destroy(qtk_spec *spec);
QTK_API qtk_status qtk_spec_num_qubits(const qtk_spec *spec, int *out);
QTK_API qtk_status qtk_spec_method(const qtk_spec *spec, char **out);
/* Structured route. report and ancilla_fidelity may be NULL. */
QTK_API qtk_status qtk_spec_apply(const qtk_spec *spec, const qtk_state *input, uint64_t seed, qtk_state **out,
                                  qtk_report *report, double *ancilla_fidelity);
/* Dense reference route. */
QTK_API qtk_status qtk_spec_apply_dense(const qtk_spec *spec, const qtk_state *input, qtk_state **out);

/* ---- drivers; each writes a JSON document to *json_out ---- */

QTK_API qtk_status qtk_verify(const qtk_spec *spec, int trials, uint64_t seed, double tolerance, char **json_out,
                              int *pass);
/* Runs once and checks the counts against the claim table. */
QTK_API qtk_status qtk_resources(const qtk_spec *spec, uint64_t seed, char **json_out, int *pass);
/* *verdict is 1 (pass), 0 (fail) or -1 (too few trials for a verdict). */
QTK_API qtk_status qtk_rotation_stats(int m, int trials, uint64_t seed, char **json_out, int *verdict);
/* phases_json is {"phases": [...]}. Fails with QTK_ERR_DOMAIN above max_qubits. */
QTK_API qtk_status qtk_decompose(const char *phases_json, int max_qubits, char **json_out, int *decomposable);
/* Necessary-condition check on `pairs` random bit pairs; *not_ruled_out is 0
 * when the diagonal is certainly not decomposable. */
QTK_API qtk_status qtk_decompose_pairwise(const char *phases_json, int pairs, uint64_t seed, char **json_out,
                                          int *not_ruled_out);
/* Demos: "grover-sign-step", "exchange-permutation", "grouped-mixing". */
QTK_API qtk_status qtk_demo(const char *name, int num_qubits, uint64_t seed, double tolerance, char **json_out,
                            int *pass);

#ifdef __cplusplus
}
#endif

#endif /* QTK_QTK_H_ */
