#ifndef ROUGH_COVER_H
#define ROUGH_COVER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RcStatus {
  RC_STATUS_OK = 0,
  RC_STATUS_NULL_POINTER = 1,
  RC_STATUS_INVALID_UTF8 = 2,
  RC_STATUS_MALFORMED_DOCUMENT = 3,
  RC_STATUS_EMPTY_UNIVERSE = 4,
  RC_STATUS_DUPLICATE_LABEL = 5,
  RC_STATUS_UNIVERSE_TOO_LARGE = 6,
  RC_STATUS_UNKNOWN_ELEMENT = 7,
  RC_STATUS_EMPTY_BLOCK = 8,
  RC_STATUS_DUPLICATE_BLOCK = 9,
  RC_STATUS_NOT_A_COVER = 10,
  RC_STATUS_BLOCK_NOT_IN_COVERING = 11,
  RC_STATUS_INDEX_OUT_OF_RANGE = 12,
  RC_STATUS_PANIC = 99,
} RcStatus;

// Opaque covering handle.
typedef struct RcCovering RcCovering;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL after a
// successful call. Valid until the next `rc_*` call on the same thread.
const char *rc_last_error_message(void);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void rc_string_free(char *s);

// Parses and validates a covering document.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum RcStatus rc_covering_from_json(const char *json, struct RcCovering **out);

// # Safety
// `c` must be NULL or a handle from this library that has not been freed.
void rc_covering_free(struct RcCovering *c);

// Writes the covering document, blocks in canonical order.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_covering_to_json(const struct RcCovering *c, char **out);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_covering_universe_size(const struct RcCovering *c, size_t *out);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_covering_block_count(const struct RcCovering *c, size_t *out);

// Mask of the block at `index` in canonical order.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_covering_block(const struct RcCovering *c, size_t index, uint64_t *out);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_is_partition(const struct RcCovering *c, bool *out);

// # Safety
// `c` must be a live handle, `x` a NUL-terminated label, `out` writable.
enum RcStatus rc_neighborhood(const struct RcCovering *c, const char *x, uint64_t *out);

// # Safety
// `c` must be a live handle, `x` a NUL-terminated label, `out` writable.
enum RcStatus rc_membership_repeat_degree(const struct RcCovering *c, const char *x, size_t *out);

// # Safety
// `c` must be a live handle, `x` and `y` NUL-terminated labels, `out`
// writable.
enum RcStatus rc_common_block_repeat_degree(const struct RcCovering *c,
                                            const char *x,
                                            const char *y,
                                            size_t *out);

// Core block of `x`. `*exists` is false when `x` has none; `*out` is then 0.
//
// # Safety
// `c` must be a live handle, `x` a NUL-terminated label, `out` and
// `exists` writable.
enum RcStatus rc_core_block(const struct RcCovering *c, const char *x, uint64_t *out, bool *exists);

// Whether `block` (a mask) is a reducible element of `c`.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_is_reducible_element(const struct RcCovering *c, uint64_t block, bool *out);

// New handle holding the neighborhoods of `c`.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_cov(const struct RcCovering *c, struct RcCovering **out);

// New handle holding `c` with its reducible blocks removed.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_reduct(const struct RcCovering *c, struct RcCovering **out);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_is_cov_fixed_point(const struct RcCovering *c, bool *out);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_is_invariable(const struct RcCovering *c, bool *out);

// The `analyze` report as JSON.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_analyze_json(const struct RcCovering *c, bool lambda, char **out);

// JSON array of covering documents whose neighborhoods equal `c`. A `limit`
// of 0 means no limit.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum RcStatus rc_preimages_json(const struct RcCovering *c, size_t limit, char **out);

// Exhaustive law check over all coverings of `{1..n}` (`n <= 4`), as the
// summary JSON document.
//
// # Safety
// `out` must be writable.
enum RcStatus rc_verify_laws_json(size_t n, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ROUGH_COVER_H */
