#ifndef EUS_LAB_H
#define EUS_LAB_H

/* Generated with cbindgen:0.29.4 */

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum EusStatus {
  EUS_STATUS_OK = 0,
  EUS_STATUS_NULL_POINTER = 1,
  EUS_STATUS_INVALID_ARGUMENT = 2,
  EUS_STATUS_OUT_OF_RANGE = 3,
  EUS_STATUS_PARSE_ERROR = 4,
  EUS_STATUS_SCAN_CAP = 5,
  EUS_STATUS_EMPTY_CLASS = 6,
  EUS_STATUS_BUFFER_TOO_SMALL = 7,
  EUS_STATUS_PANIC = 8,
} EusStatus;

typedef enum EusIndexKind {
  EUS_INDEX_KIND_EUS = 0,
  EUS_INDEX_KIND_SO = 1,
  EUS_INDEX_KIND_ESO = 2,
} EusIndexKind;

typedef enum EusDirection {
  EUS_DIRECTION_MIN = 0,
  EUS_DIRECTION_MAX = 1,
} EusDirection;

typedef enum EusVerdictStatus {
  EUS_VERDICT_STATUS_CONFIRMED = 0,
  EUS_VERDICT_STATUS_REFUTED = 1,
  EUS_VERDICT_STATUS_SKIPPED = 2,
} EusVerdictStatus;

/**
 * Opaque graph handle.
 */
typedef struct EusGraph EusGraph;

/**
 * Graph-class filter. Optional numeric fields use -1 for "unset".
 */
typedef struct EusFilter {
  bool connected;
  bool unicyclic;
  int32_t girth;
  int32_t pendant_count;
  int32_t max_degree;
  int32_t edge_count;
} EusFilter;

/**
 * Summary of a verification. Fields that do not apply are NaN.
 */
typedef struct EusVerdict {
  enum EusVerdictStatus status;
  double bound;
  double optimum;
  double gap;
  uint32_t witness_count;
  uint64_t checked;
} EusVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL
 * terminated, truncated to `cap`). Returns the full message length, or 0
 * if there is none.
 */
size_t eus_last_error_message(char *buf, size_t cap);

/**
 * Edgeless graph on `n` vertices, `1 <= n <= 64`.
 */
enum EusStatus eus_graph_new(uint32_t n, struct EusGraph **out);

/**
 * Graph from `edge_count` vertex pairs stored flat in `pairs`.
 */
enum EusStatus eus_graph_from_edges(uint32_t n,
                                    const uint32_t *pairs,
                                    size_t edge_count,
                                    struct EusGraph **out);

enum EusStatus eus_graph_from_graph6(const char *text, struct EusGraph **out);

/**
 * Parses the `n=<N>` / `i j` edge-list text format.
 */
enum EusStatus eus_graph_from_edge_list(const char *text, struct EusGraph **out);

/**
 * New graph equal to `g` plus the edge `i j`; `g` is unchanged.
 */
enum EusStatus eus_graph_add_edge(const struct EusGraph *g,
                                  uint32_t i,
                                  uint32_t j,
                                  struct EusGraph **out);

void eus_graph_free(struct EusGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 */
uint32_t eus_graph_order(const struct EusGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 */
uint32_t eus_graph_size(const struct EusGraph *g);

enum EusStatus eus_graph_degree(const struct EusGraph *g, uint32_t i, uint32_t *out);

/**
 * Girth, with 0 meaning the graph is acyclic.
 */
enum EusStatus eus_graph_girth(const struct EusGraph *g, uint32_t *out);

enum EusStatus eus_graph_is_connected(const struct EusGraph *g, bool *out);

enum EusStatus eus_graph_is_unicyclic(const struct EusGraph *g, bool *out);

enum EusStatus eus_graph_pendant_count(const struct EusGraph *g, uint32_t *out);

/**
 * Writes the graph6 string and a terminating NUL into `buf`. `out_len`
 * receives the string length (without NUL) even when `buf` is too small.
 */
enum EusStatus eus_graph_to_graph6(const struct EusGraph *g,
                                   char *buf,
                                   size_t cap,
                                   size_t *out_len);

/**
 * Isomorphism test for orders up to 12.
 */
enum EusStatus eus_are_isomorphic(const struct EusGraph *g, const struct EusGraph *h, bool *out);

enum EusStatus eus_edge_weight(enum EusIndexKind kind, uint32_t di, uint32_t dj, double *out);

enum EusStatus eus_index_value(const struct EusGraph *g, enum EusIndexKind kind, double *out);

enum EusStatus eus_cycle(uint32_t n, struct EusGraph **out);

enum EusStatus eus_path(uint32_t n, struct EusGraph **out);

enum EusStatus eus_star(uint32_t n, struct EusGraph **out);

enum EusStatus eus_complete(uint32_t n, struct EusGraph **out);

enum EusStatus eus_tadpole(uint32_t n, uint32_t g, struct EusGraph **out);

enum EusStatus eus_h1(uint32_t n, uint32_t g, uint32_t k, uint32_t l, struct EusGraph **out);

enum EusStatus eus_pineapple(uint32_t n, uint32_t p, struct EusGraph **out);

/**
 * Complete graph on `len` vertices with `counts[i]` pendants on vertex `i`.
 */
enum EusStatus eus_clique_with_pendants(const uint32_t *counts, size_t len, struct EusGraph **out);

enum EusStatus eus_formula_h1(uint32_t n, uint32_t g, uint32_t k, uint32_t l, double *out);

enum EusStatus eus_formula_unicyclic_min_bound(uint32_t n, uint32_t g, double *out);

enum EusStatus eus_formula_knp_max_bound(uint32_t n, uint32_t p, double *out);

/**
 * Extremal scan over labelled graphs on `n` vertices. Writes the optimum
 * and the number of optimizers up to isomorphism. `workers = 0` uses the
 * default pool size.
 */
enum EusStatus eus_extremal_scan(uint32_t n,
                                 const struct EusFilter *filter,
                                 enum EusIndexKind kind,
                                 enum EusDirection direction,
                                 uint32_t workers,
                                 double *out_optimum,
                                 uint32_t *out_witness_count);

enum EusStatus eus_verify_unicyclic_min(uint32_t n,
                                        uint32_t g,
                                        uint32_t workers,
                                        struct EusVerdict *out);

enum EusStatus eus_verify_connected_min(uint32_t n,
                                        uint32_t g,
                                        uint32_t workers,
                                        struct EusVerdict *out);

enum EusStatus eus_verify_knp_max(uint32_t n, uint32_t p, uint32_t workers, struct EusVerdict *out);

enum EusStatus eus_verify_h1_corollary(uint32_t n, uint32_t g, struct EusVerdict *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EUS_LAB_H */
