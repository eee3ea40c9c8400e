#ifndef LOOPN_H
#define LOOPN_H

/* This header is generated by cbindgen from the Rust sources; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum {
  /**
   * The call succeeded (for suite runs: every identity passed).
   */
  LOOPN_STATUS_OK = 0,
  /**
   * The run finished but at least one identity failed.
   */
  LOOPN_STATUS_FAILED_CHECKS = 1,
  /**
   * A NULL pointer, unknown name, or out-of-range argument.
   */
  LOOPN_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The input text could not be parsed in the element grammar.
   */
  LOOPN_STATUS_PARSE_ERROR = 3,
  /**
   * An internal invariant was violated (a bug; never expected).
   */
  LOOPN_STATUS_INTERNAL_ERROR = 4,
} LoopnStatus;

/**
 * An opaque one-site algebra element over the generic coefficient field.
 */
typedef struct LoopnElement LoopnElement;

/**
 * An opaque verification report.
 */
typedef struct LoopnReport LoopnReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The library version as a static string; do not free.
 */
const char *loopn_version(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must be a string returned by this library, not yet freed, or NULL.
 */
void loopn_string_free(char *s);

/**
 * Run a named suite. On success `*out` owns the report; release it with
 * `loopn_report_free`. Returns `Ok` when every identity passed,
 * `FailedChecks` when the report contains failures (the report is still
 * produced), and an error status otherwise (no report).
 *
 * Suites: "presentation", "alekseev", "center", "frobenius", "threading",
 * "qca", "poisson", "dressing", "skein", "all".
 *
 * # Safety
 * `suite` must point to a NUL-terminated string and `out` to writable
 * storage for one pointer; both must be valid for the duration of the call.
 */
LoopnStatus loopn_run_suite(const char *suite,
                            uint32_t n,
                            uint32_t l,
                            uint32_t jobs,
                            bool override_bounds,
                            uint64_t seed,
                            LoopnReport **out);

/**
 * Number of passed identities in the report.
 *
 * # Safety
 * The handle must be one returned by this library and not yet freed (or
 * NULL, which yields the empty/zero result).
 */
uint64_t loopn_report_pass_count(const LoopnReport *report);

/**
 * Number of failed identities in the report.
 *
 * # Safety
 * The handle must be one returned by this library and not yet freed (or
 * NULL, which yields the empty/zero result).
 */
uint64_t loopn_report_fail_count(const LoopnReport *report);

/**
 * Number of skipped identities in the report.
 *
 * # Safety
 * The handle must be one returned by this library and not yet freed (or
 * NULL, which yields the empty/zero result).
 */
uint64_t loopn_report_skip_count(const LoopnReport *report);

/**
 * The full report as pretty JSON; release with `loopn_string_free`.
 *
 * # Safety
 * The handle must be one returned by this library and not yet freed (or
 * NULL, which yields the empty/zero result).
 */
char *loopn_report_json(const LoopnReport *report);

/**
 * Release a report handle.
 *
 * # Safety
 * The handle must be one returned by this library, not yet freed, or NULL.
 */
void loopn_report_free(LoopnReport *report);

/**
 * Parse a one-site element in the grammar, e.g. "(v^2) * F K^-1 E + (1) * 1".
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` to writable
 * storage for one pointer.
 */
LoopnStatus loopn_element_parse(const char *text, LoopnElement **out);

/**
 * Print the element in the grammar (PBW normal form); release with
 * `loopn_string_free`.
 *
 * # Safety
 * The handle must be one returned by this library and not yet freed (or
 * NULL, which yields the empty/zero result).
 */
char *loopn_element_print(const LoopnElement *e);

/**
 * out = a + b.
 *
 * # Safety
 * `a` and `b` must be element handles returned by this library and not yet
 * freed; `out` must point to writable storage for one pointer.
 */
LoopnStatus loopn_element_add(const LoopnElement *a, const LoopnElement *b, LoopnElement **out);

/**
 * out = a · b in PBW normal form.
 *
 * # Safety
 * `a` and `b` must be element handles returned by this library and not yet
 * freed; `out` must point to writable storage for one pointer.
 */
LoopnStatus loopn_element_mul(const LoopnElement *a, const LoopnElement *b, LoopnElement **out);

/**
 * out = [a, b] = a·b - b·a.
 *
 * # Safety
 * `a` and `b` must be element handles returned by this library and not yet
 * freed; `out` must point to writable storage for one pointer.
 */
LoopnStatus loopn_element_commutator(const LoopnElement *a,
                                     const LoopnElement *b,
                                     LoopnElement **out);

/**
 * True when the element is zero.
 *
 * # Safety
 * The handle must be one returned by this library and not yet freed (or
 * NULL, which yields the empty/zero result).
 */
bool loopn_element_is_zero(const LoopnElement *e);

/**
 * Release an element handle.
 *
 * # Safety
 * The handle must be one returned by this library, not yet freed, or NULL.
 */
void loopn_element_free(LoopnElement *e);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOOPN_H */
