#ifndef SECDOM_H
#define SECDOM_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SecdomStatus {
  SECDOM_STATUS_OK = 0,
  SECDOM_STATUS_NULL_POINTER = 1,
  SECDOM_STATUS_INVALID_UTF8 = 2,
  SECDOM_STATUS_PARSE = 3,
  SECDOM_STATUS_INVALID_ARGUMENT = 4,
  SECDOM_STATUS_SIZE_CAP = 5,
  SECDOM_STATUS_INTERNAL = 6,
  SECDOM_STATUS_PANIC = 7,
} SecdomStatus;

typedef enum SecdomParam {
  SECDOM_PARAM_PLUS = 0,
  SECDOM_PARAM_MINUS = 1,
  SECDOM_PARAM_S = 2,
  SECDOM_PARAM_TWIN = 3,
  SECDOM_PARAM_SO = 4,
  SECDOM_PARAM_OS = 5,
  SECDOM_PARAM_OSO = 6,
  SECDOM_PARAM_ISO = 7,
} SecdomParam;

typedef enum SecdomSetKind {
  SECDOM_SET_KIND_OUT_DOMINATING = 0,
  SECDOM_SET_KIND_IN_DOMINATING = 1,
  SECDOM_SET_KIND_DOMINATING = 2,
  SECDOM_SET_KIND_TWIN_DOMINATING = 3,
  SECDOM_SET_KIND_SDS = 4,
  SECDOM_SET_KIND_SODS = 5,
  SECDOM_SET_KIND_OSDS = 6,
  SECDOM_SET_KIND_OSODS = 7,
  SECDOM_SET_KIND_ISODS = 8,
} SecdomSetKind;

/**
 * Opaque digraph handle.
 */
typedef struct SecdomDigraph SecdomDigraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *secdom_version(void);

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into the library from the same thread.
 */
const char *secdom_last_error(void);

/**
 * Parses the text digraph format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SecdomStatus secdom_digraph_parse(const char *text, struct SecdomDigraph **out);

/**
 * Builds a digraph on `n` vertices from `arc_count` pairs laid out flat in
 * `arcs` as `tail, head` with 0-based vertices.
 *
 * # Safety
 * `arcs` must point to `2 * arc_count` readable values (it may be NULL when
 * `arc_count` is 0) and `out` must be writable.
 */
enum SecdomStatus secdom_digraph_new(size_t n,
                                     const uint32_t *arcs,
                                     size_t arc_count,
                                     struct SecdomDigraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `d` must come from this library and not be freed twice.
 */
void secdom_digraph_free(struct SecdomDigraph *d);

/**
 * Vertex count, 0 for NULL.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
size_t secdom_digraph_order(const struct SecdomDigraph *d);

/**
 * Canonical text form. Free the result with [`secdom_string_free`].
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum SecdomStatus secdom_digraph_serialize(const struct SecdomDigraph *d, char **out);

/**
 * Exact minimum of `param`. The witness comes back as a mask; `size_cap` of
 * 0 selects the default order limit.
 *
 * # Safety
 * `d` must be a live handle; `value` and `witness` must be writable.
 */
enum SecdomStatus secdom_solve(const struct SecdomDigraph *d,
                               enum SecdomParam param,
                               size_t size_cap,
                               size_t *value,
                               uint64_t *witness);

/**
 * Checks whether the vertices in `mask` form a set of `kind`.
 *
 * # Safety
 * `d` must be a live handle and `valid` writable.
 */
enum SecdomStatus secdom_verify(const struct SecdomDigraph *d,
                                enum SecdomSetKind kind,
                                uint64_t mask,
                                bool *valid);

/**
 * All parameters and the bound catalogue as JSON. Free the result with
 * [`secdom_string_free`].
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum SecdomStatus secdom_survey_json(const struct SecdomDigraph *d, char **out);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void secdom_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SECDOM_H */
