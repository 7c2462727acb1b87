#ifndef POLYHOLES_H
#define POLYHOLES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PhStatus {
  PH_STATUS_OK = 0,
  PH_STATUS_NULL_ARGUMENT = 1,
  PH_STATUS_INVALID_INPUT = 2,
  PH_STATUS_PARSE = 3,
  PH_STATUS_DOMAIN = 4,
  PH_STATUS_CONTRACT = 5,
  PH_STATUS_BUDGET_EXCEEDED = 6,
  PH_STATUS_BUFFER_TOO_SMALL = 7,
  PH_STATUS_INTERNAL = 8,
  PH_STATUS_PANIC = 9,
} PhStatus;

typedef enum PhFamily {
  PH_FAMILY_S = 0,
  PH_FAMILY_A = 1,
  PH_FAMILY_R = 2,
  PH_FAMILY_R_EXT = 3,
  PH_FAMILY_R_PRIME = 4,
} PhFamily;

/**
 * Opaque polyomino handle.
 */
typedef struct PhPolyomino PhPolyomino;

typedef struct PhMetrics {
  uint64_t n;
  uint64_t holes;
  uint64_t p;
  uint64_t b;
  uint64_t p_h;
  uint64_t p_o;
  uint32_t width;
  uint32_t height;
} PhMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null if the last
 * call succeeded. Valid until the next call on the same thread.
 */
const char *ph_last_error_message(void);

/**
 * Builds a polyomino from `len` cells given as parallel coordinate arrays.
 *
 * # Safety
 * `xs` and `ys` must point to `len` readable values; `out` must be
 * writable.
 */
enum PhStatus ph_polyomino_from_cells(const int32_t *xs,
                                      const int32_t *ys,
                                      size_t len,
                                      struct PhPolyomino **out);

/**
 * Parses the `polyomino v1` text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PhStatus ph_polyomino_parse(const char *text, struct PhPolyomino **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void ph_polyomino_free(struct PhPolyomino *p);

/**
 * Number of tiles, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t ph_polyomino_len(const struct PhPolyomino *p);

/**
 * Copies the normalized cells, in canonical order, into `xs`/`ys`.
 * Fails with `PH_STATUS_BUFFER_TOO_SMALL` if `cap` is below the tile
 * count.
 *
 * # Safety
 * `p` must be a live handle; `xs` and `ys` must have room for `cap`
 * values.
 */
enum PhStatus ph_polyomino_cells(const struct PhPolyomino *p, int32_t *xs, int32_t *ys, size_t cap);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum PhStatus ph_polyomino_metrics(const struct PhPolyomino *p, struct PhMetrics *out);

/**
 * `polyomino v1` text. Free with [`ph_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum PhStatus ph_polyomino_serialize(const struct PhPolyomino *p, char **out);

/**
 * ASCII picture, top row first. Free with [`ph_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum PhStatus ph_polyomino_ascii(const struct PhPolyomino *p, char **out);

/**
 * SVG document. Free with [`ph_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum PhStatus ph_polyomino_svg(const struct PhPolyomino *p, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void ph_string_free(char *s);

/**
 * Builds a family member. `k` is used by S, A, R and R_ext, `l` by R_ext
 * and `n` by R_prime; unused parameters are ignored. The shape is checked
 * against its expected tile and hole counts before it is returned.
 *
 * # Safety
 * `out` must be writable.
 */
enum PhStatus ph_construct(enum PhFamily family,
                           uint32_t k,
                           uint64_t l,
                           uint64_t n,
                           struct PhPolyomino **out);

/**
 * Least perimeter of an `n`-omino.
 */
uint64_t ph_p_min(uint64_t n);

/**
 * Largest `h` the perimeter inequality allows as a hole count of an
 * `n`-omino.
 */
uint64_t ph_ub_fixed_point(uint64_t n);

/**
 * Upper bound on the hole count of an `n`-omino given a known lower bound.
 */
int64_t ph_ub_from_lb(uint64_t n, uint64_t lb);

/**
 * Number of fixed `n`-ominoes, counted on `workers` threads.
 *
 * # Safety
 * `out` must be writable.
 */
enum PhStatus ph_count_fixed(uint32_t n, uint32_t workers, uint64_t *out);

/**
 * Least size of a polyomino with `m` holes, with a witness. Uses the
 * sound pruning rule; `node_budget` of 0 means the default budget.
 *
 * # Safety
 * `out_g` and `out_witness` must be writable.
 */
enum PhStatus ph_search_g(uint32_t m,
                          uint64_t node_budget,
                          uint32_t *out_g,
                          struct PhPolyomino **out_witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYHOLES_H */
