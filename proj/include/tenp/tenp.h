/* Copyright 2026 The TENP Authors
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

/* C interface to the task- and energy-aware node placement library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return a tenp_status; on failure a
 * description is available from tenp_last_error() on the same thread.
 * Strings returned through `char**` are heap-allocated and must be released
 * with tenp_string_free().
 */

#ifndef TENP_TENP_H_
#define TENP_TENP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TENP_API __declspec(dllexport)
#else
#define TENP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tenp_status {
  TENP_OK = 0,
  TENP_ERR_ARGUMENT = 1,   /* bad call: null pointer, bad grid, ... */
  TENP_ERR_VALIDATION = 2, /* input violates a model invariant */
  TENP_ERR_BUDGET = 3,     /* exact search budget exhausted */
  TENP_ERR_PARSE = 4,      /* malformed config or placement text */
  TENP_ERR_IO = 5,         /* file could not be read */
  TENP_ERR_INTERNAL = 6
} tenp_status;

typedef enum tenp_variant {
  TENP_VARIANT_TENP = 0,
  TENP_VARIANT_TSP = 1,
  TENP_VARIANT_ESP = 2
} tenp_variant;

typedef enum tenp_axis { TENP_AXIS_LAMBDA = 0, TENP_AXIS_UTILITY = 1 } tenp_axis;

typedef struct tenp_instance tenp_instance;
typedef struct tenp_placement tenp_placement;

typedef struct tenp_metrics {
  double avg_harvested_charge;
  double avg_task_utility;
} tenp_metrics;

TENP_API const char* tenp_last_error(void);
TENP_API void tenp_string_free(char* s);

/* Instances */
TENP_API tenp_status tenp_instance_load_file(const char* path,
                                             tenp_instance** out);
TENP_API tenp_status tenp_instance_load_string(const char* json_text,
                                               tenp_instance** out);
TENP_API void tenp_instance_free(tenp_instance* instance);
TENP_API tenp_status tenp_instance_to_config(const tenp_instance* instance,
                                             char** out);
TENP_API size_t tenp_instance_sensor_count(const tenp_instance* instance);
TENP_API size_t tenp_instance_free_cell_count(const tenp_instance* instance);
TENP_API double tenp_instance_simulation_time(const tenp_instance* instance);
TENP_API double tenp_instance_lambda(const tenp_instance* instance);
/* Notices recorded while loading, e.g. defaulted fields. */
TENP_API size_t tenp_instance_notice_count(const tenp_instance* instance);
TENP_API const char* tenp_instance_notice(const tenp_instance* instance,
                                          size_t index);
/* Copies of the instance with one parameter replaced. */
TENP_API tenp_status tenp_instance_with_variant(const tenp_instance* instance,
                                                tenp_variant variant,
                                                tenp_instance** out);
TENP_API tenp_status tenp_instance_with_lambda(const tenp_instance* instance,
                                               double lambda,
                                               tenp_instance** out);
TENP_API tenp_status tenp_charge_bounds(const tenp_instance* instance,
                                        double* min_out, double* max_out);

/* Greedy placement. An unsatisfiable verdict is TENP_OK. */
TENP_API tenp_status tenp_solve(const tenp_instance* instance,
                                tenp_placement** out);

/* Placements */
TENP_API void tenp_placement_free(tenp_placement* placement);
TENP_API int tenp_placement_satisfiable(const tenp_placement* placement);
TENP_API size_t tenp_placement_size(const tenp_placement* placement);
/* Assignments in ascending sensor id order. */
TENP_API tenp_status tenp_placement_get(const tenp_placement* placement,
                                        size_t index, int* sensor_id, int* x,
                                        int* y);
TENP_API tenp_status tenp_placement_write(const tenp_placement* placement,
                                          char** out);
TENP_API tenp_status tenp_placement_parse(const char* text,
                                          tenp_placement** out);
TENP_API tenp_status tenp_placement_validate(const tenp_placement* placement,
                                             const tenp_instance* instance);

/* Simulation. `simulation_time_s` <= 0 uses the instance's configured time.
 * `json_out` may be NULL; when given it receives the full metrics as JSON. */
TENP_API tenp_status tenp_simulate(const tenp_instance* instance,
                                   const tenp_placement* placement,
                                   double simulation_time_s,
                                   tenp_metrics* metrics_out, char** json_out);

/* Exact search; result as JSON. */
TENP_API tenp_status tenp_oracle(const tenp_instance* instance,
                                 uint64_t budget, char** json_out);

/* Incompleteness witness search. `*out` is NULL when none was found. */
TENP_API tenp_status tenp_witness(uint64_t seed, uint64_t attempts,
                                  tenp_instance** out);

/* Grids. `out` must hold `points` doubles. */
TENP_API tenp_status tenp_lambda_grid(const tenp_instance* instance,
                                      size_t points, double* out);
TENP_API tenp_status tenp_utility_grid(double lo, double hi, size_t points,
                                       double* out);

/* Sweep CSV. `nonmonotone_out` (optional) is set to 1 when a satisfiable
 * point follows an unsatisfiable one. */
TENP_API tenp_status tenp_sweep_csv(const tenp_instance* instance,
                                    tenp_axis axis, const double* grid,
                                    size_t grid_len, double simulation_time_s,
                                    char** csv_out, int* nonmonotone_out);

/* Per-variant maxima CSV. */
TENP_API tenp_status tenp_summary_csv(const tenp_instance* instance,
                                      const double* lambda_grid,
                                      size_t lambda_len,
                                      const double* utility_grid,
                                      size_t utility_len,
                                      double simulation_time_s,
                                      char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* TENP_TENP_H_ */
