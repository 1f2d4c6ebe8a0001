/* Copyright 2026 The hsurf Authors
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

/* C interface of the hsurf library.
 *
 * Builds the infinite {3,7} polyhedral surface in the Poincare ball by gluing
 * uniform hyperbolic triangular prisms and square antiprisms, tests the
 * exposed triangle surface for self-intersection, localizes the minimal
 * non-intersecting side length by bisection, and exports OBJ / POV-Ray /
 * JSON descriptions.
 *
 * All objects are opaque handles owned by the library; every *_free accepts
 * NULL.  Functions returning hsurf_status leave outputs untouched on failure
 * and record a message retrievable with hsurf_last_error() (thread-local).
 */

#ifndef HSURF_H_
#define HSURF_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hsurf_status {
  HSURF_OK = 0,
  HSURF_ERR_INVALID_ARGUMENT = 1, /* bad parameter, degenerate input */
  HSURF_ERR_NUMERIC = 2,          /* numeric fault (residuals, merge ambiguity) */
  HSURF_ERR_IO = 3,               /* file open/write/parse failure */
  HSURF_ERR_BRACKET = 4,          /* sweep endpoints do not bracket */
  HSURF_ERR_UNSUPPORTED = 5       /* unknown dump schema version */
} hsurf_status;

typedef enum hsurf_twist {
  HSURF_TWIST_CCW = 0,
  HSURF_TWIST_CW = 1
} hsurf_twist;

typedef struct hsurf_complex hsurf_complex;
typedef struct hsurf_report hsurf_report;
typedef struct hsurf_threshold hsurf_threshold;

typedef struct hsurf_build_params {
  double side;          /* hyperbolic edge length, > 0 */
  int iterations;       /* gluing rounds after the seed, >= 0 */
  hsurf_twist twist;    /* prism attachment handedness */
  int antiprism_align;  /* antiprism base rotation, 0..3 */
} hsurf_build_params;

typedef struct hsurf_check_params {
  int depth;   /* geodesic subdivision depth per face, 0..6 */
  double eps;  /* narrow-phase distance snap; <= 0 selects the default */
} hsurf_check_params;

void hsurf_build_params_init(hsurf_build_params* p);
void hsurf_check_params_init(hsurf_check_params* p);

/* Thread-local message for the most recent failure in this thread. */
const char* hsurf_last_error(void);
const char* hsurf_status_name(hsurf_status s);

/* --- construction ------------------------------------------------------- */

hsurf_status hsurf_build(const hsurf_build_params* params, hsurf_complex** out);
void hsurf_complex_free(hsurf_complex* c);

int64_t hsurf_complex_solid_count(const hsurf_complex* c);
int64_t hsurf_complex_prism_count(const hsurf_complex* c);
int64_t hsurf_complex_antiprism_count(const hsurf_complex* c);
int64_t hsurf_complex_triangle_count(const hsurf_complex* c);
int64_t hsurf_complex_open_frame_count(const hsurf_complex* c);
int64_t hsurf_complex_vertex_count(const hsurf_complex* c);
int hsurf_complex_iterations(const hsurf_complex* c);
double hsurf_complex_side(const hsurf_complex* c);

/* --- self-intersection -------------------------------------------------- */

/* Tests the complex as-is (no first-iteration attribution). */
hsurf_status hsurf_check(const hsurf_complex* c, const hsurf_check_params* params,
                         hsurf_report** out);

/* Builds incrementally, testing after the seed and each iteration and
 * stopping at the first intersection.  Either output may be NULL; the
 * complex handed back is the one at the stopping point. */
hsurf_status hsurf_run_experiment(const hsurf_build_params* build,
                                  const hsurf_check_params* check,
                                  hsurf_report** report_out,
                                  hsurf_complex** complex_out);

void hsurf_report_free(hsurf_report* r);
int hsurf_report_intersecting(const hsurf_report* r);
/* Earliest iteration with an intersection, or -1 when unknown/none. */
int hsurf_report_first_iteration(const hsurf_report* r);
int64_t hsurf_report_pair_count(const hsurf_report* r);
int64_t hsurf_report_grazing_count(const hsurf_report* r);
/* Parent surface-triangle ids of the i-th offending (or grazing) pair. */
hsurf_status hsurf_report_pair(const hsurf_report* r, int64_t i, int* a, int* b);
hsurf_status hsurf_report_grazing(const hsurf_report* r, int64_t i, int* a, int* b);

/* --- threshold sweep ----------------------------------------------------- */

typedef struct hsurf_sweep_params {
  double lo;            /* must intersect at this side length */
  double hi;            /* must not intersect here */
  double tolerance;     /* final bracket width */
  int iterations;
  int depth;
  double eps;           /* <= 0 selects the default */
  hsurf_twist twist;
  int antiprism_align;
} hsurf_sweep_params;

void hsurf_sweep_params_init(hsurf_sweep_params* p);

hsurf_status hsurf_sweep(const hsurf_sweep_params* params, hsurf_threshold** out);
void hsurf_threshold_free(hsurf_threshold* t);
double hsurf_threshold_low(const hsurf_threshold* t);
double hsurf_threshold_high(const hsurf_threshold* t);
int hsurf_threshold_non_monotone(const hsurf_threshold* t);
int64_t hsurf_threshold_evaluation_count(const hsurf_threshold* t);
hsurf_status hsurf_threshold_evaluation(const hsurf_threshold* t, int64_t i,
                                        double* side, int* intersecting,
                                        int* first_iteration);

/* --- exporters ----------------------------------------------------------- */

hsurf_status hsurf_export_obj(const hsurf_complex* c, int depth, const char* path);
hsurf_status hsurf_export_pov(const hsurf_complex* c, const char* path);
/* report may be NULL; check params echo the depth/eps the report used. */
hsurf_status hsurf_export_json(const hsurf_complex* c, const char* command,
                               const hsurf_check_params* check,
                               const hsurf_report* report, const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HSURF_H_ */
