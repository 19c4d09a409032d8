#ifndef TWISTORLAB_H
#define TWISTORLAB_H

/* C interface to the twistorlab verification library. Strings returned by
 * the library are owned by it; handles are released with the matching
 * *_free function. On failure the thread's last error message describes
 * the problem. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TL_API __declspec(dllexport)
#else
#define TL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tl_status {
  TL_OK = 0,
  TL_ERR_ZERO_DIVISOR,
  TL_ERR_SINGULAR_FIELD,
  TL_ERR_SINGULAR_MOEBIUS,
  TL_ERR_DEGENERATE_MAP,
  TL_ERR_NOT_NORMALIZED,
  TL_ERR_SINGULAR_POINT,
  TL_ERR_DEGENERATE_FACTORIZATION,
  TL_ERR_BRANCH_FAILURE,
  TL_ERR_CHART_MISS,
  TL_ERR_ORIGIN_SINGULAR,
  TL_ERR_DEGENERATE_EMBEDDING,
  TL_ERR_NO_INTERSECTION,
  TL_ERR_CHART_SINGULAR,
  TL_ERR_POLE_CHART,
  TL_ERR_NON_NULL_DIRECTION,
  TL_ERR_SINGULAR_ON_PATH,
  TL_ERR_NOT_A_SOLUTION,
  TL_ERR_UNKNOWN_SUITE,
  TL_ERR_IO,
  TL_ERR_INVALID_ARGUMENT,
  TL_ERR_NULL_POINTER,
  TL_ERR_INTERNAL
} tl_status;

typedef struct tl_report tl_report;

typedef struct tl_check_info {
  const char* id;
  const char* anchor;
  int samples;
  double value; /* NaN when the check raised an error */
  double tol;
  int lower_bound; /* 0: pass when value <= tol, 1: pass when value > tol */
  int pass;
  const char* error; /* empty string when none */
} tl_check_info;

typedef struct tl_grid_result {
  size_t rows;
  size_t nan_rows;
} tl_grid_result;

TL_API const char* tl_version(void);
TL_API const char* tl_status_name(tl_status status);
/* Message of the last failed call on this thread, "" if none. */
TL_API const char* tl_last_error(void);

/* Suites, including the aggregate "all" as the last entry. */
TL_API size_t tl_suite_count(void);
TL_API tl_status tl_suite_info(size_t index, const char** name, const char** anchor, int* checks);

/* samples <= 0 and tol <= 0 keep the per-check defaults. */
TL_API tl_status tl_run_suite(const char* name, uint64_t seed, int samples, double tol, tl_report** out);
TL_API void tl_report_free(tl_report* report);
TL_API int tl_report_pass(const tl_report* report);
TL_API size_t tl_report_check_count(const tl_report* report);
TL_API tl_status tl_report_check(const tl_report* report, size_t index, tl_check_info* out);
TL_API double tl_report_wall_seconds(const tl_report* report);
/* JSON text, valid until the report is freed. */
TL_API const char* tl_report_json(const tl_report* report, int include_timing);
TL_API tl_status tl_report_write(const tl_report* report, const char* path, int include_timing);

/* field: lambda | curvature_norm | fct_residual | xi_norm.
 * axes: "q0=-2:2:0.25,q1=0"; line may be NULL unless an axis is t. */
TL_API tl_status tl_grid_export(const char* field, const char* axes, const char* line, const char* out_path,
                                tl_grid_result* out);

#ifdef __cplusplus
}
#endif

#endif
