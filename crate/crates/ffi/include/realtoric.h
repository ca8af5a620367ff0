#ifndef REALTORIC_H
#define REALTORIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Largest `n` accepted by `rt_lambda_typea`.
 */
#define RT_MAX_TYPEA_N 10

/**
 * Largest `n` whose Euler number fits in an `int64_t`.
 */
#define RT_MAX_EULER_N 23

typedef enum RtStatus {
  RT_STATUS_OK = 0,
  RT_STATUS_NULL_POINTER = 1,
  RT_STATUS_INVALID_ARGUMENT = 2,
  RT_STATUS_UNSUPPORTED_TYPE = 3,
  RT_STATUS_E6_DISABLED = 4,
  RT_STATUS_RESOURCE_CAP = 5,
  RT_STATUS_BUFFER_TOO_SMALL = 6,
  RT_STATUS_INTERNAL = 7,
} RtStatus;

/**
 * Opaque Weyl group handle.
 */
typedef struct RtWeylGroup RtWeylGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a
 * successful one. Valid until the next call into this library.
 */
const char *rt_last_error_message(void);

/**
 * Builds the Weyl group of type `family` (one of `ABCDEFG`) and `rank`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum RtStatus rt_group_new(char family, uint32_t rank, bool enable_e6, struct RtWeylGroup **out);

/**
 * # Safety
 * `g` must come from `rt_group_new` and not have been freed. NULL is ignored.
 */
void rt_group_free(struct RtWeylGroup *g);

/**
 * # Safety
 * `g` must be a live handle and `out` valid for writing.
 */
enum RtStatus rt_group_order(const struct RtWeylGroup *g, uint64_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` valid for writing.
 */
enum RtStatus rt_group_rank(const struct RtWeylGroup *g, uint32_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` valid for writing.
 */
enum RtStatus rt_group_num_classes(const struct RtWeylGroup *g, size_t *out);

/**
 * Class sizes in class order; `len` must be at least the number of classes.
 *
 * # Safety
 * `buf` must be valid for `len` writes.
 */
enum RtStatus rt_group_class_sizes(const struct RtWeylGroup *g, uint64_t *buf, size_t len);

/**
 * Representative of class `class_index` as a reduced word such as `"s1 s2"`
 * (`"e"` for the identity), NUL-terminated. `needed` receives the buffer
 * size including the terminator, even when `buf` is too small.
 *
 * # Safety
 * `buf` must be valid for `len` writes; `needed` may be NULL.
 */
enum RtStatus rt_group_class_word(const struct RtWeylGroup *g,
                                  size_t class_index,
                                  char *buf,
                                  size_t len,
                                  size_t *needed);

/**
 * Values of Lambda on each class, in class order. Computed once per handle.
 *
 * # Safety
 * `buf` must be valid for `len` writes.
 */
enum RtStatus rt_group_lambda(const struct RtWeylGroup *g, int64_t *buf, size_t len);

/**
 * Permutation character on `N/2N`, in class order.
 *
 * # Safety
 * `buf` must be valid for `len` writes.
 */
enum RtStatus rt_group_pi_two(const struct RtWeylGroup *g, int64_t *buf, size_t len);

/**
 * Euler characteristic of the real toric variety, `sum_w (-1)^des(w)`.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for writing.
 */
enum RtStatus rt_group_euler_char(const struct RtWeylGroup *g, int64_t *out);

/**
 * Number of partitions of `n`, the length of `rt_lambda_typea` output.
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum RtStatus rt_partition_count(uint32_t n, size_t *out);

/**
 * Lambda for `S_n` by cycle type, partitions in reverse lexicographic
 * order (`n`, `n-1 + 1`, ..., `1 + ... + 1`).
 *
 * # Safety
 * `buf` must be valid for `len` writes.
 */
enum RtStatus rt_lambda_typea(uint32_t n, int64_t *buf, size_t len);

/**
 * Euler number `E_n` (zero for even `n`).
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum RtStatus rt_euler_number(uint32_t n, int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REALTORIC_H */
