#ifndef CURVESPEC_H
#define CURVESPEC_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes for every fallible call. Matches the CLI exit-code
 * contract, with FFI-specific argument failures on top.
 */
typedef enum curvespec_status {
  CURVESPEC_STATUS_OK = 0,
  CURVESPEC_STATUS_INVALID_INPUT = 1,
  CURVESPEC_STATUS_VERIFICATION_FAILED = 2,
  CURVESPEC_STATUS_GUARD_LIMIT = 3,
  CURVESPEC_STATUS_NULL_ARGUMENT = 4,
  CURVESPEC_STATUS_INVALID_UTF8 = 5,
} curvespec_status;

/**
 * Opaque analysis result for one pair list.
 */
typedef struct curvespec_analysis curvespec_analysis;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a pair list (`"k1,n1;k2,n2"`) and run the full analysis. On
 * success writes the new handle through `out`; the caller owns it and
 * must release it with `curvespec_analysis_free`.
 *
 * # Safety
 * `pairs` must be a valid NUL-terminated string and `out` a valid
 * pointer.
 */
enum curvespec_status curvespec_analysis_new(const char *pairs, struct curvespec_analysis **out);

/**
 * Release an analysis handle. Accepts null.
 *
 * # Safety
 * `handle` must come from `curvespec_analysis_new` and not be used
 * afterwards.
 */
void curvespec_analysis_free(struct curvespec_analysis *handle);

/**
 * Milnor number of the analyzed singularity.
 *
 * # Safety
 * `handle` must be a live analysis handle.
 */
uint64_t curvespec_milnor_number(const struct curvespec_analysis *handle);

/**
 * Number of distinct spectrum entries.
 *
 * # Safety
 * `handle` must be a live analysis handle.
 */
uintptr_t curvespec_spectrum_len(const struct curvespec_analysis *handle);

/**
 * Spectrum entry at `index` as an exact `"p/q"` string; also writes
 * the multiplicity if `mult` is non-null. Returns null when the index
 * is out of range. Release the string with `curvespec_string_free`.
 *
 * # Safety
 * `handle` must be a live analysis handle; `mult` may be null.
 */
char *curvespec_spectrum_entry(const struct curvespec_analysis *handle,
                               uintptr_t index,
                               uint64_t *mult);

/**
 * Log canonical threshold as an exact `"p/q"` string.
 *
 * # Safety
 * `handle` must be a live analysis handle.
 */
char *curvespec_lct(const struct curvespec_analysis *handle);

/**
 * Full JSON report for the analyzed pair list.
 *
 * # Safety
 * `handle` must be a live analysis handle.
 */
char *curvespec_report_json(const struct curvespec_analysis *handle);

/**
 * DOT text of the resolution; `dual` selects the dual graph instead
 * of the Enriques diagram.
 *
 * # Safety
 * `handle` must be a live analysis handle.
 */
char *curvespec_dot(const struct curvespec_analysis *handle, bool dual);

/**
 * Run the full verification harness on the analyzed pair list.
 * Returns `Ok` when every check passes and `VerificationFailed`
 * otherwise (with the first failing check in the error message).
 *
 * # Safety
 * `handle` must be a live analysis handle.
 */
enum curvespec_status curvespec_verify(const struct curvespec_analysis *handle);

/**
 * Release a string returned by any accessor. Accepts null.
 *
 * # Safety
 * `text` must come from this library and not be used afterwards.
 */
void curvespec_string_free(char *text);

/**
 * Message of the most recent error on this thread, or null if none.
 * Owned by the library; do not free. Valid until the next failing
 * call on the same thread.
 */
const char *curvespec_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CURVESPEC_H */
