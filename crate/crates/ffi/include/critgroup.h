#ifndef CRITGROUP_H
#define CRITGROUP_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CgStatus {
  CG_STATUS_OK = 0,
  CG_STATUS_NULL_POINTER = 1,
  CG_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed input or a violated precondition.
   */
  CG_STATUS_INVALID = 3,
  /**
   * Well-formed input the operation cannot handle, e.g. a disconnected graph.
   */
  CG_STATUS_INFEASIBLE = 4,
  /**
   * A value does not fit the C type requested.
   */
  CG_STATUS_OVERFLOW = 5,
  CG_STATUS_PANIC = 6,
} CgStatus;

typedef struct CgGraph CgGraph;

typedef struct CgGroup CgGroup;

typedef struct CgMarking CgMarking;

typedef struct CgMatrix CgMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Valid until the
 * next call into this library from the same thread; do not free.
 */
const char *cg_last_error_message(void);

/**
 * # Safety
 * `s` is NULL or a string returned by this library, not yet freed.
 */
void cg_string_free(char *s);

/**
 * Parses the graph text format (`n`, `e` lines, one-based in the text).
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum CgStatus cg_graph_parse(const char *src, struct CgGraph **out);

/**
 * # Safety
 * `g` is a valid graph handle.
 */
size_t cg_graph_vertex_count(const struct CgGraph *g);

/**
 * The graph in the text format. Free with [`cg_string_free`].
 *
 * # Safety
 * `g` is a valid graph handle; `out` is writable.
 */
enum CgStatus cg_graph_to_text(const struct CgGraph *g, char **out);

/**
 * # Safety
 * `g` is NULL or a handle from [`cg_graph_parse`], not yet freed.
 */
void cg_graph_free(struct CgGraph *g);

/**
 * Parses the matrix text format (`m rows cols`, then rows).
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum CgStatus cg_matrix_parse(const char *src, struct CgMatrix **out);

/**
 * Laplacian of `g`: `D - A` when `psd` is true, `A - D` otherwise.
 *
 * # Safety
 * `g` is a valid graph handle; `out` is writable.
 */
enum CgStatus cg_graph_laplacian(const struct CgGraph *g, bool psd, struct CgMatrix **out);

/**
 * # Safety
 * `m` is NULL or a matrix handle, not yet freed.
 */
void cg_matrix_free(struct CgMatrix *m);

/**
 * Critical group of a connected graph: the torsion part of the Laplacian
 * cokernel.
 *
 * # Safety
 * `g` is a valid graph handle; `out` is writable.
 */
enum CgStatus cg_critical_group(const struct CgGraph *g, struct CgGroup **out);

/**
 * Number of invariant factors (all greater than 1).
 *
 * # Safety
 * `grp` is a valid group handle.
 */
size_t cg_group_factor_count(const struct CgGroup *grp);

/**
 * Invariant factor `k` as a decimal string.
 *
 * # Safety
 * `grp` is a valid group handle; `out` is writable.
 */
enum CgStatus cg_group_factor(const struct CgGroup *grp, size_t k, char **out);

/**
 * Group order (the number of spanning trees) as a decimal string.
 *
 * # Safety
 * `grp` is a valid group handle; `out` is writable.
 */
enum CgStatus cg_group_order(const struct CgGroup *grp, char **out);

/**
 * Structure such as `Z/4 x Z/4`.
 *
 * # Safety
 * `grp` is a valid group handle; `out` is writable.
 */
enum CgStatus cg_group_to_string(const struct CgGroup *grp, char **out);

/**
 * # Safety
 * `grp` is NULL or a group handle, not yet freed.
 */
void cg_group_free(struct CgGroup *grp);

/**
 * Order of the class of `e_i - e_j` as a decimal string.
 *
 * # Safety
 * `g` is a valid graph handle; `out` is writable.
 */
enum CgStatus cg_pair_order(const struct CgGraph *g, size_t i, size_t j, char **out);

/**
 * Normalized marking of the pair `(i, j)`.
 *
 * # Safety
 * `g` is a valid graph handle; `out` is writable.
 */
enum CgStatus cg_marking(const struct CgGraph *g, size_t i, size_t j, struct CgMarking **out);

/**
 * # Safety
 * `mk` is a valid marking handle; `out` is writable.
 */
enum CgStatus cg_marking_order(const struct CgMarking *mk, char **out);

/**
 * # Safety
 * `mk` is a valid marking handle.
 */
size_t cg_marking_len(const struct CgMarking *mk);

/**
 * Weight of vertex `v` as a decimal string.
 *
 * # Safety
 * `mk` is a valid marking handle; `out` is writable.
 */
enum CgStatus cg_marking_weight(const struct CgMarking *mk, size_t v, char **out);

/**
 * # Safety
 * `mk` is NULL or a marking handle, not yet freed.
 */
void cg_marking_free(struct CgMarking *mk);

/**
 * Collapsed values of a square matrix in `[lo, hi]`, ascending. Free the
 * array with [`cg_values_free`].
 *
 * # Safety
 * `m` is a valid matrix handle; `out` and `out_len` are writable.
 */
enum CgStatus cg_collapsed_values(const struct CgMatrix *m,
                                  int64_t lo,
                                  int64_t hi,
                                  int64_t **out,
                                  size_t *out_len);

/**
 * All collapsed values of a square matrix, ascending.
 *
 * # Safety
 * `m` is a valid matrix handle; `out` and `out_len` are writable.
 */
enum CgStatus cg_collapsed_values_full(const struct CgMatrix *m, int64_t **out, size_t *out_len);

/**
 * # Safety
 * `values` and `len` come from one collapsed-values call, not yet freed.
 */
void cg_values_free(int64_t *values, size_t len);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CRITGROUP_H */
