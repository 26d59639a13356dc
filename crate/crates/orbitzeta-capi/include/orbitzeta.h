#ifndef ORBITZETA_H
#define ORBITZETA_H

/* Generated by cbindgen from orbitzeta-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum OzStatus {
  OZ_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  OZ_STATUS_NULL_POINTER = 1,
  /**
   * Input text was not valid UTF-8.
   */
  OZ_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed input (bad partition syntax, nonpositive part, ...).
   */
  OZ_STATUS_VALIDATION = 3,
  /**
   * Input outside an operation's mathematical domain.
   */
  OZ_STATUS_DOMAIN = 4,
  /**
   * An exact division failed.
   */
  OZ_STATUS_DIVISIBILITY = 5,
  /**
   * The enumeration ceiling was exceeded.
   */
  OZ_STATUS_RESOURCE_LIMIT = 6,
  /**
   * A mathematical invariant failed; report this as a bug.
   */
  OZ_STATUS_INTERNAL = 7,
} OzStatus;

/**
 * Opaque partition handle.
 */
typedef struct OzPartition OzPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *oz_version(void);

/**
 * Returns and clears the message of the most recent error on this thread,
 * or NULL if none. Free with [`oz_string_free`].
 */
char *oz_last_error_message(void);

/**
 * Frees a string allocated by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be a pointer previously returned by one of this library's
 * string-producing functions and not yet freed.
 */
void oz_string_free(char *s);

/**
 * Parses a partition from text: comma-separated parts ("3,3,1") or the
 * rectangle shorthand "r^m" ("2^3").
 *
 * # Safety
 * `text` must point to a NUL-terminated string; `out` must be a valid
 * pointer. On OK the caller owns the handle and must release it with
 * [`oz_partition_free`].
 */
enum OzStatus oz_partition_parse(const char *text, struct OzPartition **out);

/**
 * Releases a partition handle. NULL is a no-op.
 *
 * # Safety
 * `p` must come from [`oz_partition_parse`] and not be freed twice.
 */
void oz_partition_free(struct OzPartition *p);

/**
 * Sum of the parts (N). Returns 0 for NULL.
 *
 * # Safety
 * `p` must be a live handle from [`oz_partition_parse`] or NULL.
 */
uint32_t oz_partition_n(const struct OzPartition *p);

/**
 * Number of parts (m). Returns 0 for NULL.
 *
 * # Safety
 * `p` must be a live handle from [`oz_partition_parse`] or NULL.
 */
uint32_t oz_partition_m(const struct OzPartition *p);

/**
 * True iff all parts are equal. False for NULL.
 *
 * # Safety
 * `p` must be a live handle from [`oz_partition_parse`] or NULL.
 */
bool oz_partition_is_rectangle(const struct OzPartition *p);

/**
 * C_lambda(x,q) in canonical text form. `use_enumeration` selects the
 * enumeration route (subject to `ceiling`) instead of the default
 * generating-identity route.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid. Free the result with
 * [`oz_string_free`].
 */
enum OzStatus oz_cpoly_text(const struct OzPartition *p,
                            bool use_enumeration,
                            uint64_t ceiling,
                            char **out);

/**
 * The descent polynomial C_lambda(x,1) in canonical text form.
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_descent_poly_text(const struct OzPartition *p, char **out);

/**
 * C_lambda(-1,1) as a decimal string.
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_charney_davis_decimal(const struct OzPartition *p, char **out);

/**
 * JSON report of the polynomial functional equation of C_lambda.
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_funeq_json(const struct OzPartition *p, char **out);

/**
 * JSON report of the Euler-factor functional equation under p -> p^-1.
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_euler_funeq_json(const struct OzPartition *p, uint64_t prime, char **out);

/**
 * JSON report of the Charney-Davis quantity and the prescribed unitary
 * factor probe.
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_unitary_json(const struct OzPartition *p, char **out);

/**
 * CSV scan (header plus one row per pair) of C_{(l1,l2)}(-1,1) over
 * l1 > l2 >= 1 with l1 + l2 <= max_n.
 *
 * # Safety
 * `out` must be valid; free the result with [`oz_string_free`].
 */
enum OzStatus oz_scan_conjecture_csv(uint32_t max_n, char **out);

/**
 * CSV of (n, O(n), partial sum) for n = 1..n_max.
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_orbit_counts_csv(const struct OzPartition *p, uint64_t n_max, char **out);

/**
 * JSON of the Euler factor at a prime with series prefix through t^series_k.
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_euler_factor_json(const struct OzPartition *p,
                                   uint64_t prime,
                                   size_t series_k,
                                   char **out);

/**
 * JSON of the Euler factor of the m-th power of a map shifted by the
 * integer `shift`.
 *
 * # Safety
 * `out` must be valid; free the result with [`oz_string_free`].
 */
enum OzStatus oz_shifted_euler_factor_json(uint32_t m,
                                           uint32_t shift,
                                           uint64_t prime,
                                           size_t series_k,
                                           char **out);

/**
 * JSON of the partial-sum growth fit (slope, K estimate, decade ratios).
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_asymptotics_json(const struct OzPartition *p, uint64_t n_max, char **out);

/**
 * JSON natural-boundary classification (type, Newton data, ghost factor,
 * B-polynomials).
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_boundary_report_json(const struct OzPartition *p, char **out);

/**
 * Compares the Igusa-form rewriting of the Euler factor with its series
 * through t^series_k; writes the verdict to `out_holds`.
 *
 * # Safety
 * `p` must be a live handle; `out_holds` must be valid.
 */
enum OzStatus oz_igusa_check(const struct OzPartition *p,
                             uint64_t prime,
                             size_t series_k,
                             uint64_t ceiling,
                             bool *out_holds);

/**
 * The reduced series C_lambda(t,1)/(1-t)^N in text form.
 *
 * # Safety
 * As for [`oz_cpoly_text`].
 */
enum OzStatus oz_reduced_text(const struct OzPartition *p, char **out);

/**
 * Hilbert series of the face ring of the barycentric subdivision of the
 * (m-1)-simplex, in text form.
 *
 * # Safety
 * `out` must be valid; free the result with [`oz_string_free`].
 */
enum OzStatus oz_hilbert_sd_text(uint32_t m, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBITZETA_H */
