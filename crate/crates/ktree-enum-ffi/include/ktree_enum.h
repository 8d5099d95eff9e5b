/* C interface to the k-tree enumeration engine. */

#ifndef KTREE_ENUM_H
#define KTREE_ENUM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible entry point.
 */
typedef enum KtreeStatus {
  KTREE_STATUS_OK = 0,
  /**
   * A parameter was out of range or malformed (k = 0, wrong partition
   * weight, null pointer, ...).
   */
  KTREE_STATUS_INVALID_ARGUMENT = 1,
  /**
   * The request is valid but outside an engine's supported scale.
   */
  KTREE_STATUS_UNSUPPORTED = 2,
  /**
   * An internal invariant failed; indicates a bug, not caller error.
   */
  KTREE_STATUS_INTERNAL_ERROR = 3,
} KtreeStatus;

/**
 * Opaque table of counts for one k (see `ktree_table_*`).
 */
typedef struct KtreeTable KtreeTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes the counts of unlabeled k-trees with 0..=n_max hedra and hands
 * back an owned table through `out`.
 *
 * # Safety
 * `out` must be a valid pointer to writable `*mut KtreeTable` storage.
 */
enum KtreeStatus ktree_table_compute(uint32_t k, uint32_t n_max, struct KtreeTable **out);

/**
 * # Safety
 * `table` must be a live pointer from [`ktree_table_compute`].
 */
uint32_t ktree_table_k(const struct KtreeTable *table);

/**
 * Number of entries (n_max + 1); 0 for a null table.
 *
 * # Safety
 * `table` must be null or a live pointer from [`ktree_table_compute`].
 */
uint32_t ktree_table_len(const struct KtreeTable *table);

/**
 * The count for hedron count `n` as a decimal string, or null when `n` is
 * out of range. Free with [`ktree_string_free`].
 *
 * # Safety
 * `table` must be null or a live pointer from [`ktree_table_compute`].
 */
char *ktree_table_count_decimal(const struct KtreeTable *table, uint32_t n);

/**
 * The whole table as JSON (`{"k":…,"n_max":…,"engine":…,"counts":[…]}`).
 * Free with [`ktree_string_free`].
 *
 * # Safety
 * `table` must be null or a live pointer from [`ktree_table_compute`].
 */
char *ktree_table_to_json(const struct KtreeTable *table);

/**
 * The whole table as CSV (`n,count` header, LF line endings). Free with
 * [`ktree_string_free`].
 *
 * # Safety
 * `table` must be null or a live pointer from [`ktree_table_compute`].
 */
char *ktree_table_to_csv(const struct KtreeTable *table);

/**
 * Releases a table. Null is a no-op.
 *
 * # Safety
 * `table` must be null or a pointer from [`ktree_table_compute`] that has
 * not been freed yet.
 */
void ktree_table_free(struct KtreeTable *table);

/**
 * Releases a string returned by any `ktree_*` function. Null is a no-op.
 *
 * # Safety
 * `s` must be null or an unfreed pointer returned by this library.
 */
void ktree_string_free(char *s);

/**
 * Brute-force count of unlabeled k-trees with exactly `n` hedra (the
 * independent oracle; bounds k ≤ 3, n ≤ 5).
 *
 * # Safety
 * `out` must be a valid pointer to writable u64 storage.
 */
enum KtreeStatus ktree_brute_count(uint32_t k, uint32_t n, uint64_t *out);

/**
 * The class-indexed front-rooted series for the partition `parts[0..n_parts]`
 * of k, to the given degree, as a comma-separated decimal string written
 * through `out`. The partition weight must equal k.
 *
 * # Safety
 * `parts` must point to `n_parts` readable u32 values and `out` to writable
 * `*mut char` storage.
 */
enum KtreeStatus ktree_front_rooted_series(uint32_t k,
                                           const uint32_t *parts,
                                           size_t n_parts,
                                           uint32_t degree,
                                           char **out);

/**
 * Library version as a static NUL-terminated string; do not free.
 */
const char *ktree_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KTREE_ENUM_H */
