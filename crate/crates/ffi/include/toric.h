/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TORIC_H
#define TORIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  TORIC_STATUS_OK = 0,
  TORIC_STATUS_NULL_POINTER = 1,
  TORIC_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The input was rejected by the computation (gcd, arity, syntax...).
   */
  TORIC_STATUS_REJECTED = 3,
  /**
   * Internal consistency failure or a caught panic.
   */
  TORIC_STATUS_INTERNAL = 4,
} ToricStatus;

typedef enum {
  TORIC_VERDICT_YES = 0,
  TORIC_VERDICT_NO = 1,
  TORIC_VERDICT_UNKNOWN = 2,
} ToricVerdict;

/**
 * A binomial ideal together with its variable names.
 */
typedef struct ToricIdeal ToricIdeal;

/**
 * Classification of a monomial curve in 4-space.
 */
typedef struct ToricReport ToricReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until
 * the next call into this library on the same thread.
 */
const char *toric_last_error(void);

const char *toric_version(void);

void toric_string_free(char *s);

ToricStatus toric_frobenius_number(const uint64_t *a, size_t n, int64_t *out);

ToricStatus toric_is_symmetric(const uint64_t *a, size_t n, bool *out);

/**
 * Classifies `(a[0], ..., a[3])`; `n` must be 4.
 */
ToricStatus toric_classify(const uint64_t *a, size_t n, ToricReport **out);

void toric_report_free(ToricReport *r);

ToricStatus toric_report_json(const ToricReport *r, char **out);

ToricStatus toric_report_case(const ToricReport *r, char **out);

ToricStatus toric_report_unique(const ToricReport *r, bool *out);

ToricStatus toric_report_mu(const ToricReport *r, size_t *out);

/**
 * Toric ideal of the curve `(t^a[0], ..., t^a[n-1])`.
 */
ToricStatus toric_curve_ideal(const uint64_t *a, size_t n, ToricIdeal **out);

/**
 * Ideal from the text of an ideal file (one binomial per line).
 */
ToricStatus toric_ideal_parse(const char *src, ToricIdeal **out);

void toric_ideal_free(ToricIdeal *j);

ToricStatus toric_ideal_contains(const ToricIdeal *j, const char *binomial, bool *out);

/**
 * Minimal generators, one binomial per line.
 */
ToricStatus toric_ideal_minimal_generators(const ToricIdeal *j, char **out);

ToricStatus toric_ideal_uniqueness(const ToricIdeal *j, ToricVerdict *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_H */
