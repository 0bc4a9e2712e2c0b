#ifndef RCN_H
#define RCN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RcnStatus {
  RCN_STATUS_OK = 0,
  RCN_STATUS_NULL_POINTER = 1,
  RCN_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Repeated point or three collinear points.
   */
  RCN_STATUS_DEGENERATE = 3,
  RCN_STATUS_OUT_OF_RANGE = 4,
  /**
   * The output buffer is too small; the required length was written.
   */
  RCN_STATUS_BUFFER_TOO_SMALL = 5,
  RCN_STATUS_PANIC = 6,
} RcnStatus;

/**
 * Opaque half-period of a circular sequence.
 */
typedef struct RcnHalfPeriod RcnHalfPeriod;

/**
 * Opaque point set.
 */
typedef struct RcnPointSet RcnPointSet;

typedef struct RcnCrossing {
  uint64_t brute;
  int64_t identity;
  int64_t cumulative;
  bool agreement;
} RcnCrossing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *rcn_last_error_message(void);

/**
 * Builds a point set from `n` coordinate pairs.
 *
 * # Safety
 * `xs` and `ys` must point to `n` readable values; `out` must be writable.
 */
enum RcnStatus rcn_point_set_new(const int64_t *xs,
                                 const int64_t *ys,
                                 size_t n,
                                 struct RcnPointSet **out);

/**
 * # Safety
 * `set` must come from [`rcn_point_set_new`] and not be freed yet, or be null.
 */
void rcn_point_set_free(struct RcnPointSet *set);

/**
 * # Safety
 * `set` must be a live handle; `len` must be writable.
 */
enum RcnStatus rcn_point_set_len(const struct RcnPointSet *set, size_t *len);

/**
 * Writes `E_0, ..., E_{floor(n/2)-1}` into `out`.
 *
 * # Safety
 * `set` must be a live handle, `out` must hold `cap` values, `len` must be
 * writable.
 */
enum RcnStatus rcn_edge_vector(const struct RcnPointSet *set,
                               uint64_t *out,
                               size_t cap,
                               size_t *len);

/**
 * Crossing count by brute force and by both edge-count identities.
 *
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum RcnStatus rcn_crossing(const struct RcnPointSet *set, struct RcnCrossing *out);

/**
 * Lower bound on the number of `(<=k)`-edges of any `n` points.
 *
 * # Safety
 * `out` must be writable.
 */
enum RcnStatus rcn_lower_bound_leq_k(size_t n, size_t k, uint64_t *out);

/**
 * Half-period of the circular sequence of `set`.
 *
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum RcnStatus rcn_half_period_from_point_set(const struct RcnPointSet *set,
                                              struct RcnHalfPeriod **out);

/**
 * # Safety
 * `h` must come from [`rcn_half_period_from_point_set`] and not be freed
 * yet, or be null.
 */
void rcn_half_period_free(struct RcnHalfPeriod *h);

/**
 * Initial permutation (point indices).
 *
 * # Safety
 * `h` must be a live handle, `out` must hold `cap` values, `len` writable.
 */
enum RcnStatus rcn_half_period_initial(const struct RcnHalfPeriod *h,
                                       size_t *out,
                                       size_t cap,
                                       size_t *len);

/**
 * Gate of every step, `1 <= g < n`.
 *
 * # Safety
 * `h` must be a live handle, `out` must hold `cap` values, `len` writable.
 */
enum RcnStatus rcn_half_period_gates(const struct RcnHalfPeriod *h,
                                     size_t *out,
                                     size_t cap,
                                     size_t *len);

/**
 * Smallest rotation at which the sequence is 3-decomposable. `found` is false
 * when there is none.
 *
 * # Safety
 * `h` must be a live handle; `found` and `rotation` writable.
 */
enum RcnStatus rcn_search_decomposition(const struct RcnHalfPeriod *h,
                                        bool *found,
                                        size_t *rotation);

/**
 * Edge count of the extremal digraph `D0(v, m)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RcnStatus rcn_d0_edge_count(size_t v, size_t m, size_t *out);

/**
 * Crossing number of `K_30` derived by the bound chain, and whether every
 * step matched its expected value.
 *
 * # Safety
 * `value` and `consistent` must be writable.
 */
enum RcnStatus rcn_k30(int64_t *value, bool *consistent);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RCN_H */
