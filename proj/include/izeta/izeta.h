/*
 *     Copyright 2026 The izeta Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

/* C interface to the izeta library. All functions are thread-compatible:
 * distinct instances may be used from distinct threads; the last-error
 * message is per thread. Strings returned through char** are owned by the
 * caller and released with izeta_string_free. */

#ifndef IZETA_IZETA_H
#define IZETA_IZETA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IZETA_API __declspec(dllexport)
#else
#define IZETA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum izeta_status {
    IZETA_OK = 0,
    IZETA_PARSE_ERROR = 1,
    IZETA_SELF_LOOP = 2,
    IZETA_DUPLICATE_EDGE = 3,
    IZETA_ASYMMETRIC_EDGE = 4,
    IZETA_EMPTY_GRAPH = 5,
    IZETA_INVALID_ACTION = 6,
    IZETA_NOT_FREE = 7,
    IZETA_RADIUS_TOO_SMALL = 8,
    IZETA_ACTION_MISMATCH = 9,
    IZETA_BAD_CONSTANT_TERM = 10,
    IZETA_DOMAIN_ERROR = 11,
    IZETA_HULL_CONTAINS_ZERO = 12,
    IZETA_BRANCH_OBSTRUCTION = 13,
    IZETA_QUADRATURE_NOT_CONVERGED = 14,
    IZETA_TRUNCATION_NOT_CONVERGED = 15,
    IZETA_OUTSIDE_OMEGA = 16,
    IZETA_NOT_REGULAR = 17,
    IZETA_INVALID_ARGUMENT = 18,
    IZETA_INTERNAL_ERROR = 99
} izeta_status;

typedef struct izeta_instance izeta_instance;

typedef struct izeta_complex {
    double re;
    double im;
} izeta_complex;

typedef enum izeta_format {
    IZETA_FORMAT_TEXT = 0,
    IZETA_FORMAT_JSONL = 1,
    IZETA_FORMAT_CSV = 2
} izeta_format;

/* Bit flags for izeta_report_zeta / izeta_zeta_at. */
typedef enum izeta_method {
    IZETA_METHOD_EULER = 1,
    IZETA_METHOD_TRACES = 2,
    IZETA_METHOD_DET_SERIES = 4,
    IZETA_METHOD_DET_BLOCH = 8,
    IZETA_METHOD_ALL = 15
} izeta_method;

typedef struct izeta_options {
    int quadrature_start;
    int quadrature_cap;
    double quadrature_tolerance;
    double series_tolerance;
    int max_series_order;
    int euler_len;
    int trace_order;
} izeta_options;

typedef struct izeta_info {
    int periodic;
    int vertex_count; /* |V| for finite graphs, cell size for periodic ones */
    int edge_count;   /* |E|, or edges per cell */
    int rank;
    int group_order;  /* 0 for translation actions */
    int max_degree;
    int min_degree;
    int regular;
    int q;
    int vb;
    int eb;
    int chi;
} izeta_info;

IZETA_API const char* izeta_version(void);
IZETA_API const char* izeta_status_name(izeta_status status);
/* Message for the most recent failure on this thread; "" if none. */
IZETA_API const char* izeta_last_error(void);
IZETA_API void izeta_options_default(izeta_options* opts);
IZETA_API void izeta_string_free(char* s);

/* Loaders set *out to NULL on failure. */
IZETA_API izeta_status izeta_load_file(const char* path, izeta_instance** out);
IZETA_API izeta_status izeta_load_text(const char* text, izeta_instance** out);
/* Row-major symmetric 0/1 matrix with zero diagonal. */
IZETA_API izeta_status izeta_load_adjacency(int n, const int* adjacency, izeta_instance** out);
/* edges holds edge_count records of (i, j, v_1..v_rank). */
IZETA_API izeta_status izeta_load_periodic(int rank, int cell_size, int edge_count, const int* edges,
                                           izeta_instance** out);
/* generators holds generator_count permutations of length n. */
IZETA_API izeta_status izeta_load_quotient(int n, const int* adjacency, int generator_count, const int* generators,
                                           izeta_instance** out);
IZETA_API void izeta_free(izeta_instance* inst);

IZETA_API izeta_status izeta_get_info(const izeta_instance* inst, izeta_info* out);
IZETA_API izeta_status izeta_serialize(const izeta_instance* inst, char** out);

/* Reduced closed-path counts N_0..N_max_order from operator traces; fails with
 * IZETA_INVALID_ARGUMENT if a count does not fit in 64 bits. */
IZETA_API izeta_status izeta_reduced_counts(const izeta_instance* inst, int max_order, int64_t* out);
/* Same counts from brute-force enumeration. */
IZETA_API izeta_status izeta_oracle_counts(const izeta_instance* inst, int max_len, int64_t* out);

/* Z(u) by one method (a single izeta_method flag). opts may be NULL. */
IZETA_API izeta_status izeta_zeta_at(const izeta_instance* inst, izeta_complex u, izeta_method method,
                                     const izeta_options* opts, izeta_complex* out);
/* det_Gamma(I - Au + Qu^2) by IZETA_METHOD_DET_SERIES or IZETA_METHOD_DET_BLOCH. */
IZETA_API izeta_status izeta_det_gamma(const izeta_instance* inst, izeta_complex u, izeta_method method,
                                       const izeta_options* opts, izeta_complex* out);
IZETA_API int izeta_omega_contains(izeta_complex u, int q);
/* out[0..3]: Lambda, xi, Xi residuals and the reflection residual at u. */
IZETA_API izeta_status izeta_functional_residuals(const izeta_instance* inst, izeta_complex u,
                                                  const izeta_options* opts, double* out);
IZETA_API izeta_status izeta_parse_complex(const char* text, izeta_complex* out);

IZETA_API izeta_status izeta_report_cycles(const izeta_instance* inst, int max_len, izeta_format format, char** out);
IZETA_API izeta_status izeta_report_traces(const izeta_instance* inst, int order, izeta_format format, char** out);
IZETA_API izeta_status izeta_report_zeta_series(const izeta_instance* inst, int order, int decimal,
                                                izeta_format format, char** out);
IZETA_API izeta_status izeta_report_zeta_values(const izeta_instance* inst, const izeta_complex* points, int count,
                                                unsigned methods, const izeta_options* opts, izeta_format format,
                                                char** out);
/* series_order > 0 selects exact series mode and ignores points. */
IZETA_API izeta_status izeta_report_det_formula(const izeta_instance* inst, const izeta_complex* points, int count,
                                                int series_order, int use_series, int use_bloch,
                                                const izeta_options* opts, izeta_format format, char** out);
IZETA_API izeta_status izeta_report_functional_eq(const izeta_instance* inst, int points, uint64_t seed,
                                                  const izeta_options* opts, izeta_format format, char** out);
/* *passed is 1 when every check passes. */
IZETA_API izeta_status izeta_report_verify(const izeta_instance* inst, int order, int quadrature, int points,
                                           uint64_t seed, izeta_format format, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
