#ifndef RURQ_H
#define RURQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum RurqStatus {
  RURQ_STATUS_OK = 0,
  RURQ_STATUS_NULL_POINTER = 1,
  RURQ_STATUS_INVALID_ARGUMENT = 2,
  RURQ_STATUS_OUT_OF_RANGE = 3,
  RURQ_STATUS_EMPTY_BOX = 4,
  RURQ_STATUS_CAPACITY = 5,
  RURQ_STATUS_UNSUPPORTED = 6,
  RURQ_STATUS_PARSE = 7,
  RURQ_STATUS_PANIC = 8,
} RurqStatus;

typedef enum RurqStructureKind {
  RURQ_STRUCTURE_KIND_RURQ = 0,
  RURQ_STRUCTURE_KIND_SEGTREE1D = 1,
  RURQ_STRUCTURE_KIND_QUADTREE = 2,
  RURQ_STRUCTURE_KIND_OCTREE = 3,
  RURQ_STRUCTURE_KIND_ORACLE = 4,
} RurqStructureKind;

/**
 * Opaque range-update range-query tree.
 */
typedef struct RurqHandle RurqHandle;

/**
 * Opaque handle to any structure, chosen by [`RurqStructureKind`].
 */
typedef struct RurqStructure RurqStructure;

/**
 * Message for the most recent failure on this thread. Valid until the next
 * failing call on this thread.
 */
const char *rurq_last_error(void);

/**
 * Static name of a status code.
 */
const char *rurq_status_name(enum RurqStatus status);

/**
 * Creates a zeroed tree over `[1..=side]^dim`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RurqStatus rurq_tree_new(size_t dim, size_t side, struct RurqHandle **out);

/**
 * # Safety
 * `handle` must be null or come from [`rurq_tree_new`] and not be freed yet.
 */
void rurq_tree_free(struct RurqHandle *handle);

/**
 * Number of coefficient trees, `2^dim`; 0 for a null handle.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
size_t rurq_tree_count(const struct RurqHandle *handle);

/**
 * Total cells allocated across all coefficient trees.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
size_t rurq_tree_cells(const struct RurqHandle *handle);

/**
 * Adds `c` to every cell of `[lo : hi]`.
 *
 * # Safety
 * `handle` must be live; `lo` and `hi` must each point to `dim` values.
 */
enum RurqStatus rurq_tree_update(struct RurqHandle *handle,
                                 const size_t *lo,
                                 const size_t *hi,
                                 size_t dim,
                                 int64_t c);

/**
 * Writes `rsum(1..1 : p)` to `out`.
 *
 * # Safety
 * `handle` must be live; `p` must point to `dim` values; `out` must be
 * valid for writes.
 */
enum RurqStatus rurq_tree_prefix(const struct RurqHandle *handle,
                                 const size_t *p,
                                 size_t dim,
                                 int64_t *out);

/**
 * Writes the sum over `[lo : hi]` to `out`.
 *
 * # Safety
 * `handle` must be live; `lo` and `hi` must each point to `dim` values;
 * `out` must be valid for writes.
 */
enum RurqStatus rurq_tree_range_sum(const struct RurqHandle *handle,
                                    const size_t *lo,
                                    const size_t *hi,
                                    size_t dim,
                                    int64_t *out);

/**
 * Creates any supported structure.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum RurqStatus rurq_structure_new(enum RurqStructureKind kind,
                                   size_t dim,
                                   size_t side,
                                   struct RurqStructure **out);

/**
 * # Safety
 * `handle` must be null or come from [`rurq_structure_new`] and not be
 * freed yet.
 */
void rurq_structure_free(struct RurqStructure *handle);

/**
 * # Safety
 * As [`rurq_tree_update`].
 */
enum RurqStatus rurq_structure_update(struct RurqStructure *handle,
                                      const size_t *lo,
                                      const size_t *hi,
                                      size_t dim,
                                      int64_t c);

/**
 * # Safety
 * As [`rurq_tree_range_sum`], with a mutable handle.
 */
enum RurqStatus rurq_structure_query(struct RurqStructure *handle,
                                     const size_t *lo,
                                     const size_t *hi,
                                     size_t dim,
                                     int64_t *out);

/**
 * Enables or disables visit counting.
 *
 * # Safety
 * `handle` must be null or live.
 */
void rurq_structure_set_counting(struct RurqStructure *handle, bool on);

/**
 * Nodes or cells touched since creation or the last reset.
 *
 * # Safety
 * `handle` must be null or live.
 */
uint64_t rurq_structure_visits(const struct RurqStructure *handle);

/**
 * Parses `script` (NUL-terminated UTF-8), runs it on a fresh structure of
 * `kind`, and returns the query results in a newly allocated array that
 * must be released with [`rurq_results_free`].
 *
 * # Safety
 * `script` must be a valid C string; `out_results` and `out_len` must be
 * valid for writes.
 */
enum RurqStatus rurq_run_script(const char *script,
                                enum RurqStructureKind kind,
                                int64_t **out_results,
                                size_t *out_len);

/**
 * # Safety
 * `results`/`len` must come from one [`rurq_run_script`] call, or
 * `results` must be null.
 */
void rurq_results_free(int64_t *results, size_t len);

#endif  /* RURQ_H */
