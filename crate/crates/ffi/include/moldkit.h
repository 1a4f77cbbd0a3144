#ifndef MOLDKIT_H
#define MOLDKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. The first four agree with the command-line exit codes.
 */
typedef enum MoldkitStatus {
  MOLDKIT_STATUS_OK = 0,
  /**
   * The input is valid but the operation does not apply (for example, no Borel mold).
   */
  MOLDKIT_STATUS_DOMAIN_ERROR = 1,
  MOLDKIT_STATUS_INPUT_ERROR = 2,
  MOLDKIT_STATUS_RESOURCE_LIMIT = 3,
  MOLDKIT_STATUS_NULL_POINTER = 4,
  MOLDKIT_STATUS_PANIC = 5,
} MoldkitStatus;

/**
 * Opaque handle to a validated representation.
 */
typedef struct MoldkitRep MoldkitRep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a representation document and stores a new handle in `*out`.
 *
 * # Safety
 * `json` must be a valid nul-terminated string; `out` must be writable.
 */
enum MoldkitStatus moldkit_rep_from_json(const char *json, struct MoldkitRep **out);

/**
 * Releases a handle. Passing null is a no-op.
 *
 * # Safety
 * `rep` must come from [`moldkit_rep_from_json`] and not have been freed.
 */
void moldkit_rep_free(struct MoldkitRep *rep);

/**
 * The matrix size `n` of a representation.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum MoldkitStatus moldkit_rep_degree(const struct MoldkitRep *rep, size_t *out);

/**
 * Whether the images generate a Borel mold.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum MoldkitStatus moldkit_is_borel(const struct MoldkitRep *rep, bool *out);

/**
 * Dimension of the algebra generated by the images.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum MoldkitStatus moldkit_closure_rank(const struct MoldkitRep *rep, size_t *out);

/**
 * Canonical data as a JSON document.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum MoldkitStatus moldkit_canonical_json(const struct MoldkitRep *rep,
                                          size_t max_word_len,
                                          char **out);

/**
 * Stores 1 (equivalent), 0 (inequivalent) or −1 (undecided) in `*out`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum MoldkitStatus moldkit_equivalent(const struct MoldkitRep *a,
                                      const struct MoldkitRep *b,
                                      size_t max_word_len,
                                      int32_t *out);

/**
 * `Δ(A, B)` of the first two generators of a degree-2 representation, as a decimal string.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum MoldkitStatus moldkit_discriminant(const struct MoldkitRep *rep, char **out);

/**
 * Census of `d`-dimensional unital subalgebras of `M_n(F_q)` as JSON.
 *
 * `jobs = 0` uses every core. Searches above the configured candidate
 * limit fail with [`MoldkitStatus::ResourceLimit`].
 *
 * # Safety
 * `out` must be writable.
 */
enum MoldkitStatus moldkit_enumerate_molds(size_t n, size_t d, uint64_t q, size_t jobs, char **out);

/**
 * The predicted census count. `*known` is false when no prediction exists
 * or the value does not fit in 64 bits.
 *
 * # Safety
 * `count` and `known` must be writable.
 */
enum MoldkitStatus moldkit_predicted_count(size_t n,
                                           size_t d,
                                           uint64_t q,
                                           uint64_t *count,
                                           bool *known);

/**
 * Message of the last failed call on this thread, or null.
 *
 * The pointer stays valid until the next `moldkit_*` call on the same thread.
 */
const char *moldkit_last_error_message(void);

/**
 * Releases a string returned by this library. Passing null is a no-op.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void moldkit_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MOLDKIT_H */
