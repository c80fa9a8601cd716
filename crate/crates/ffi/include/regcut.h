#ifndef REGCUT_H
#define REGCUT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RcStatus {
  RC_STATUS_OK = 0,
  RC_STATUS_NULL_POINTER = 1,
  RC_STATUS_INVALID_ARGUMENT = 2,
  RC_STATUS_PARSE_ERROR = 3,
  RC_STATUS_BUFFER_TOO_SMALL = 4,
  RC_STATUS_INTERNAL = 5,
} RcStatus;

/**
 * Opaque graph handle.
 */
typedef struct RcGraph RcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread, or NULL. The pointer stays valid until
 * the next failing call on the same thread.
 */
const char *rc_last_error(void);

/**
 * Parses a NUL-terminated graph6 string.
 *
 * # Safety
 * `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
 * or valid for writes.
 */
enum RcStatus rc_graph_from_graph6(const char *text, struct RcGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library that has not been freed.
 */
void rc_graph_free(struct RcGraph *g);

/**
 * Writes a newly allocated graph6 string to `out`; release it with
 * [`rc_string_free`].
 *
 * # Safety
 * `g` must be a live handle or NULL; `out` must be NULL or valid for writes.
 */
enum RcStatus rc_graph_to_graph6(const struct RcGraph *g, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void rc_string_free(char *s);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `g` must be a live handle or NULL.
 */
size_t rc_graph_order(const struct RcGraph *g);

/**
 * Common degree of a regular graph; `InvalidArgument` if not regular.
 *
 * # Safety
 * `g` must be a live handle or NULL; `out` must be NULL or valid for writes.
 */
enum RcStatus rc_graph_regular_degree(const struct RcGraph *g, size_t *out);

/**
 * Builds G(d, c). `cycles` holds `n_cycles` cycle lengths for the
 * cycle-complement block; pass `n_cycles = 0` for a single cycle.
 *
 * # Safety
 * `cycles` must point to `n_cycles` readable values when `n_cycles > 0`;
 * `out` must be NULL or valid for writes.
 */
enum RcStatus rc_build_extremal(size_t d,
                                size_t c,
                                const size_t *cycles,
                                size_t n_cycles,
                                struct RcGraph **out);

/**
 * Writes the adjacency eigenvalues, non-increasing, into `buf`.
 * `written` receives the number of eigenvalues; when `len` is too small
 * nothing is copied and `BufferTooSmall` is returned.
 *
 * # Safety
 * `g` must be a live handle or NULL; `buf` must be valid for `len` writes;
 * `written` must be NULL or valid for writes.
 */
enum RcStatus rc_graph_spectrum(const struct RcGraph *g, double *buf, size_t len, size_t *written);

/**
 * Second largest adjacency eigenvalue.
 *
 * # Safety
 * `g` must be a live handle or NULL; `out` must be NULL or valid for writes.
 */
enum RcStatus rc_graph_lambda2(const struct RcGraph *g, double *out);

/**
 * Sharp λ₂ threshold for degree `d` and its optimal branch degree.
 *
 * # Safety
 * `c_star` and `value` must be NULL or valid for writes.
 */
enum RcStatus rc_threshold(size_t d, size_t *c_star, double *value);

/**
 * # Safety
 * `a` and `b` must be live handles or NULL; `out` must be NULL or valid for
 * writes.
 */
enum RcStatus rc_graph_is_isomorphic(const struct RcGraph *a, const struct RcGraph *b, bool *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* REGCUT_H */
