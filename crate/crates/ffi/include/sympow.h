#ifndef SYMPOW_H
#define SYMPOW_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum SympowStatus {
  SYMPOW_STATUS_OK = 0,
  SYMPOW_STATUS_NULL_POINTER = 1,
  SYMPOW_STATUS_INVALID_ARGUMENT = 2,
  SYMPOW_STATUS_PARSE_ERROR = 3,
  SYMPOW_STATUS_CAP_EXCEEDED = 4,
  SYMPOW_STATUS_EXCLUDED_PARAMETER = 5,
  SYMPOW_STATUS_MISMATCH = 6,
  SYMPOW_STATUS_IO = 7,
  SYMPOW_STATUS_PANIC = 8,
} SympowStatus;

/**
 * A graded Betti table in the quotient convention.
 */
typedef struct SympowBettiTable SympowBettiTable;

/**
 * A monomial ideal in minimal-generator form.
 */
typedef struct SympowIdeal SympowIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy of the last error message on this thread, or NULL if the last call
 * succeeded. Release with [`sympow_string_free`].
 */
char *sympow_last_error(void);

/**
 * Release a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void sympow_string_free(char *s);

/**
 * Parse a comma-separated list of monomials such as `x1^2*x2, x3` in
 * `ambient` variables.
 *
 * # Safety
 * `text` must be NULL or a NUL-terminated string; `out` must be valid for
 * writes.
 */
enum SympowStatus sympow_ideal_parse(const char *text, size_t ambient, struct SympowIdeal **out);

/**
 * `I(K_m)^(s)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SympowStatus sympow_ideal_complete_symbolic(size_t m, uint32_t s, struct SympowIdeal **out);

/**
 * `I(G)^(s)` for the graph on `vertex_count` vertices whose edges are the
 * `edge_count` pairs `(edges[2k], edges[2k + 1])`, numbered from 1.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be NULL when
 * `edge_count` is 0); `out` must be valid for writes.
 */
enum SympowStatus sympow_ideal_graph_symbolic(size_t vertex_count,
                                              const uint32_t *edges,
                                              size_t edge_count,
                                              uint32_t s,
                                              struct SympowIdeal **out);

/**
 * Number of minimal generators.
 *
 * # Safety
 * `ideal` must be NULL or a live handle; `out` must be valid for writes.
 */
enum SympowStatus sympow_ideal_generator_count(const struct SympowIdeal *ideal, size_t *out);

/**
 * The generators as text, e.g. `x1^2*x2, x3`. Release with
 * [`sympow_string_free`].
 *
 * # Safety
 * `ideal` must be NULL or a live handle; `out` must be valid for writes.
 */
enum SympowStatus sympow_ideal_to_string(const struct SympowIdeal *ideal, char **out);

/**
 * Release an ideal. NULL is ignored.
 *
 * # Safety
 * `ideal` must be NULL or a live handle not used afterwards.
 */
void sympow_ideal_free(struct SympowIdeal *ideal);

/**
 * Betti table of `R/I` from the Koszul oracle. `characteristic` 0 selects
 * the rationals; `degree_cap` 0 selects a cap that covers every entry.
 *
 * # Safety
 * `ideal` must be NULL or a live handle; `out` must be valid for writes.
 */
enum SympowStatus sympow_betti_oracle(const struct SympowIdeal *ideal,
                                      uint32_t characteristic,
                                      uint32_t degree_cap,
                                      struct SympowBettiTable **out);

/**
 * Betti table of `R/I(K_m)^(s)` from the splitting recursion.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SympowStatus sympow_betti_recursive_complete(size_t m,
                                                  uint32_t s,
                                                  uint32_t characteristic,
                                                  struct SympowBettiTable **out);

/**
 * Betti table of `R/I(K_m)^(s)` from the Koszul oracle with the default
 * cap for complete graphs.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SympowStatus sympow_betti_oracle_complete(size_t m,
                                               uint32_t s,
                                               uint32_t characteristic,
                                               struct SympowBettiTable **out);

/**
 * `beta_{i,j}`; zero for absent entries.
 *
 * # Safety
 * `table` must be NULL or a live handle; `out` must be valid for writes.
 */
enum SympowStatus sympow_betti_get(const struct SympowBettiTable *table,
                                   size_t i,
                                   uint32_t j,
                                   uint64_t *out);

/**
 * Number of nonzero entries.
 *
 * # Safety
 * `table` must be NULL or a live handle; `out` must be valid for writes.
 */
enum SympowStatus sympow_betti_entry_count(const struct SympowBettiTable *table, size_t *out);

/**
 * The `index`-th nonzero entry in `(i, j)` order.
 *
 * # Safety
 * `table` must be NULL or a live handle; the outputs must be valid for
 * writes.
 */
enum SympowStatus sympow_betti_entry(const struct SympowBettiTable *table,
                                     size_t index,
                                     size_t *out_i,
                                     uint32_t *out_j,
                                     uint64_t *out_beta);

/**
 * JSON rendering of the table. Release with [`sympow_string_free`].
 *
 * # Safety
 * `table` must be NULL or a live handle; `out` must be valid for writes.
 */
enum SympowStatus sympow_betti_to_json(const struct SympowBettiTable *table, char **out);

/**
 * Release a table. NULL is ignored.
 *
 * # Safety
 * `table` must be NULL or a live handle not used afterwards.
 */
void sympow_betti_free(struct SympowBettiTable *table);

/**
 * Minimum socle degree of `R/I` from its table, whose last row must be
 * `m - 1`.
 *
 * # Safety
 * `table` must be NULL or a live handle; `out` must be valid for writes.
 */
enum SympowStatus sympow_min_socle_degree(const struct SympowBettiTable *table,
                                          size_t m,
                                          uint32_t *out);

/**
 * Build the splitting of `I_{K_m \ K_r, s}` and check it exhaustively over
 * subsets of at most `subset_cap` elements. `out_valid` receives the
 * verdict.
 *
 * # Safety
 * `out_valid` must be valid for writes.
 */
enum SympowStatus sympow_split_verify(size_t m,
                                      uint32_t s,
                                      size_t r,
                                      size_t subset_cap,
                                      bool *out_valid);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMPOW_H */
