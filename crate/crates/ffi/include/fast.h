#ifndef FAST_H
#define FAST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a scenario run that completed without error.
 */
typedef enum FastRunStatus {
  FAST_RUN_STATUS_OK = 0,
  FAST_RUN_STATUS_FIDELITY_INFEASIBLE = 1,
  FAST_RUN_STATUS_LATENCY_INFEASIBLE = 2,
} FastRunStatus;

/**
 * Return code of every fallible call. Codes 2 to 5 match the CLI exit codes.
 */
typedef enum FastStatus {
  FAST_STATUS_OK = 0,
  FAST_STATUS_INVALID_ARGUMENT = 2,
  FAST_STATUS_INFEASIBLE = 3,
  FAST_STATUS_NUMERIC = 4,
  FAST_STATUS_IO = 5,
  FAST_STATUS_NULL_POINTER = 6,
  FAST_STATUS_PANIC = 7,
} FastStatus;

/**
 * Opaque result handle.
 */
typedef struct FastResult FastResult;

/**
 * Opaque scenario handle.
 */
typedef struct FastScenario FastScenario;

/**
 * `phi(pi) = kappa1 ln(kappa2 / pi + kappa3) + kappa4` on `[pi_min, 1]`.
 */
typedef struct FastCurve {
  double kappa1;
  double kappa2;
  double kappa3;
  double kappa4;
  double pi_min;
} FastCurve;

typedef struct FastTau {
  double tau1;
  double tau2;
  double tau3;
  double tau4;
} FastTau;

typedef struct FastLimits {
  double alpha_min;
  double beta_min;
  double gamma_min;
} FastLimits;

typedef struct FastSplit {
  double alpha;
  double beta;
  double gamma;
} FastSplit;

typedef struct FastStrategy {
  double pi;
  double f_e;
  double f_d;
  double power;
} FastStrategy;

typedef struct FastCost {
  double t_tot;
  double e_cmp;
  double e_com;
  double e_tot;
  double data_bits;
  double fidelity;
} FastCost;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *fast_last_error_message(void);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum FastStatus fast_curve_default(struct FastCurve *out);

/**
 * # Safety
 * `curve` must be valid for reads and `out` for writes.
 */
enum FastStatus fast_curve_eval(const struct FastCurve *curve, double pi, double *out);

/**
 * Smallest scaling factor meeting `phi_min`.
 *
 * # Safety
 * `curve` must be valid for reads and `out` for writes.
 */
enum FastStatus fast_curve_invert(const struct FastCurve *curve, double phi_min, double *out);

/**
 * Energy-optimal time split. `tol <= 0` or `max_iters == 0` selects the
 * defaults. `energy` may be null.
 *
 * # Safety
 * `tau` and `limits` must be valid for reads, `out` for writes, and
 * `energy` null or valid for writes.
 */
enum FastStatus fast_solve_split(const struct FastTau *tau,
                                 const struct FastLimits *limits,
                                 double tol,
                                 size_t max_iters,
                                 struct FastSplit *out,
                                 double *energy);

/**
 * New handle holding the reference scenario. Never null.
 */
struct FastScenario *fast_scenario_default(void);

/**
 * Load a scenario file into a new handle.
 *
 * # Safety
 * `path` must be a NUL-terminated UTF-8 string and `out` valid for writes.
 */
enum FastStatus fast_scenario_from_file(const char *path, struct FastScenario **out);

/**
 * # Safety
 * `s` must be null or a handle from this library not yet freed.
 */
void fast_scenario_free(struct FastScenario *s);

/**
 * # Safety
 * `s` must be a live scenario handle.
 */
enum FastStatus fast_scenario_set_distance(struct FastScenario *s, double meters);

/**
 * # Safety
 * `s` must be a live scenario handle.
 */
enum FastStatus fast_scenario_set_t_max(struct FastScenario *s, double seconds);

/**
 * # Safety
 * `s` must be a live scenario handle.
 */
enum FastStatus fast_scenario_set_phi_min(struct FastScenario *s, double phi_min);

/**
 * # Safety
 * `s` must be a live scenario handle and `curve` valid for reads.
 */
enum FastStatus fast_scenario_set_curve(struct FastScenario *s, const struct FastCurve *curve);

/**
 * Solve the scenario with default solver settings.
 *
 * An infeasible scenario is not an error: the call succeeds and the
 * result's run status says which constraint failed.
 *
 * # Safety
 * `s` must be a live scenario handle and `out` valid for writes.
 */
enum FastStatus fast_run(const struct FastScenario *s, struct FastResult **out);

/**
 * # Safety
 * `r` must be null or a handle from this library not yet freed.
 */
void fast_result_free(struct FastResult *r);

/**
 * # Safety
 * `r` must be a live result handle and `out` valid for writes.
 */
enum FastStatus fast_result_status(const struct FastResult *r, enum FastRunStatus *out);

/**
 * # Safety
 * `r` must be a live result handle and `out` valid for writes.
 */
enum FastStatus fast_result_strategy(const struct FastResult *r, struct FastStrategy *out);

/**
 * # Safety
 * `r` must be a live result handle and `out` valid for writes.
 */
enum FastStatus fast_result_cost(const struct FastResult *r, struct FastCost *out);

/**
 * # Safety
 * `r` must be a live result handle and `out` valid for writes.
 */
enum FastStatus fast_result_split(const struct FastResult *r, struct FastSplit *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FAST_H */
