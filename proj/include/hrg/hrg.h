// Copyright 2026 The hrg Authors
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

/* C interface to the hrg library. Every fallible call returns an hrg_status;
 * on failure hrg_last_error() describes the problem (thread-local, valid
 * until the next call on the same thread). Strings returned through char**
 * are owned by the caller and released with hrg_string_free. Structured
 * results are JSON documents, two-space indented with a trailing newline. */

#ifndef HRG_HRG_H_
#define HRG_HRG_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HRG_API __declspec(dllexport)
#else
#define HRG_API __attribute__((visibility("default")))
#endif

/* Status codes. Values are stable; new codes are only appended. */
typedef enum hrg_status {
  HRG_OK = 0,
  HRG_MALFORMED_INPUT = 1,
  HRG_COLOR_OUT_OF_RANGE = 2,
  HRG_NOT_COMPOSABLE = 3,
  HRG_DEGREE_OUT_OF_RANGE = 4,
  HRG_UNKNOWN_VERTEX = 5,
  HRG_UNKNOWN_NAME = 6,
  HRG_NON_FUNCTORIAL_COCYCLE = 7,
  HRG_NOT_A_SKEW_PRODUCT = 8,
  HRG_NOT_AN_AUTOMORPHISM = 9,
  HRG_AUTOMORPHISMS_DONT_COMMUTE = 10,
  HRG_NOT_A_BIJECTION = 11,
  HRG_NOT_YANG_BAXTER = 12,
  HRG_WINDOW_TOO_SMALL = 13,
  HRG_WINDOW_EXHAUSTED = 14,
  HRG_DISCONNECTED = 15,
  HRG_NOT_SINGLY_CONNECTED = 16,
  HRG_NO_GRADING = 17,
  HRG_SHIFT_EQUIVALENT_DETECTED = 18,
  HRG_UNSUPPORTED_ORDER = 19,
  HRG_TRIELLA_AXIOM_VIOLATION = 20,
  HRG_SHAPE_MISMATCH = 21,
  HRG_SHAPE_TOO_SMALL = 22,
  HRG_IO = 23,
  HRG_INTERNAL = 99
} hrg_status;

typedef enum hrg_verdict { HRG_EMBEDS = 0, HRG_NOT_EMBEDS = 1, HRG_INCONCLUSIVE = 2 } hrg_verdict;

/* A finite presentation, or a lazy (infinite) graph from the catalog. */
typedef struct hrg_graph hrg_graph;

HRG_API const char* hrg_version(void);
/* "MalformedInput" etc.; "Unknown" for values outside the enum. */
HRG_API const char* hrg_status_name(int status);
HRG_API const char* hrg_last_error(void);
HRG_API void hrg_string_free(char* s);

HRG_API int hrg_graph_from_json(const char* json, hrg_graph** out);
HRG_API int hrg_graph_load(const char* path, hrg_graph** out);
/* Finite entries give a presentation; lazy ones give a lazy handle. */
HRG_API int hrg_graph_catalog(const char* name, hrg_graph** out);
/* Window of `radius` edge steps around `seed`. Works on either kind. */
HRG_API int hrg_graph_window(const hrg_graph* g, const char* seed, int radius, hrg_graph** out);
HRG_API void hrg_graph_free(hrg_graph* g);
/* 1 for lazy handles, 0 for presentations. */
HRG_API int hrg_graph_is_lazy(const hrg_graph* g);

/* Presentation JSON. Lazy handles fail with HRG_WINDOW_TOO_SMALL. */
HRG_API int hrg_graph_to_json(const hrg_graph* g, char** out);
HRG_API int hrg_graph_to_dot(const hrg_graph* g, char** out);
/* *pass is 1 or 0; the report names the failure and its witness. */
HRG_API int hrg_graph_validate(const hrg_graph* g, int partial, int* pass, char** report);

/* options: {"depth": 10, "degree_bound": [2, 2], "hint": {cocycle},
 * "partial": false} with every field optional (depth 10, bound all twos, no
 * hint). The graph is validated first, in partial mode for window dumps;
 * failure gives HRG_MALFORMED_INPUT. */
HRG_API int hrg_graph_analyze(const hrg_graph* g, const char* options, int* verdict, char** report);

/* Runs a construction pipeline; relative paths resolve against base_dir
 * (NULL for "."). *partial is 1 when the result is a window. */
HRG_API int hrg_build(const char* pipeline, const char* base_dir, hrg_graph** out, int* partial);

/* [{"name", "description", "kind": "finite"|"lazy"}]. */
HRG_API int hrg_catalog_list(char** out);

/* group: NULL for the A1 preset, or an "a2" group description. word:
 * whitespace separated aN / aN^-1 tokens. Result:
 * {"normal_form", "left_normal_form", "shape": [p, n], "text"}. */
HRG_API int hrg_a2_normalize(const char* group, const char* word, char** out);
/* The 2-graph of the group together with {"b": {edge: word}, "c": {...}}. */
HRG_API int hrg_a2_lambda_t(const char* group, hrg_graph** out, char** cocycles);
/* Adjacency matrices of the 2-graph as CSV, vertices in shortlex order. */
HRG_API int hrg_a2_matrices(const char* group, char** m1, char** m2);

/* Diagonal separation search for streams x, y on g. Shift-equivalent input
 * returns HRG_SHIFT_EQUIVALENT_DETECTED. radius <= 0 means the default. */
HRG_API int hrg_orbit_separate(const hrg_graph* g, const char* x, const char* y, int n_max, int radius, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HRG_HRG_H_ */
