#ifndef SZEGED_H
#define SZEGED_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Graph classes accepted by `sz_enumerate_count`.
typedef enum SzClass {
  SZ_CLASS_TREES = 0,
  SZ_CLASS_UNICYCLIC = 1,
  SZ_CLASS_BICYCLIC = 2,
  SZ_CLASS_CONNECTED = 3,
  SZ_CLASS_CYCLIC = 4,
} SzClass;

// Status codes returned by every fallible function.
typedef enum SzStatus {
  SZ_STATUS_OK = 0,
  SZ_STATUS_NULL_POINTER = 1,
  SZ_STATUS_INVALID_UTF8 = 2,
  SZ_STATUS_INVALID_GRAPH6 = 3,
  SZ_STATUS_INVALID_PARAMETER = 4,
  SZ_STATUS_TOO_MANY_VERTICES = 5,
  SZ_STATUS_VERTEX_OUT_OF_RANGE = 6,
  SZ_STATUS_NOT_CONNECTED = 7,
  SZ_STATUS_TRIVIAL_GRAPH = 8,
  SZ_STATUS_GUARD_EXCEEDED = 9,
  SZ_STATUS_INTERNAL = 10,
} SzStatus;

// Opaque graph handle.
typedef struct SzGraph SzGraph;

// Exact ratio `num / den`, reduced, `den > 0`.
typedef struct SzRatio {
  int64_t num;
  int64_t den;
} SzRatio;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses one graph6 line.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum SzStatus sz_graph_from_graph6(const char *text, struct SzGraph **out);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`
// (`edges[2i]`, `edges[2i+1]`).
//
// # Safety
// `edges` must point to `2 * edge_count` values (may be null when zero);
// `out` must be writable.
enum SzStatus sz_graph_from_edges(uintptr_t n,
                                  const uint32_t *edges,
                                  uintptr_t edge_count,
                                  struct SzGraph **out);

// Builds a named family member, e.g. `"lollipop:10:4"` or `"h:10:2"`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be writable.
enum SzStatus sz_family_build(const char *spec, struct SzGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from this library and not be freed twice.
void sz_graph_free(struct SzGraph *g);

// Number of vertices, 0 for null.
//
// # Safety
// `g` must be null or a live handle.
uintptr_t sz_graph_order(const struct SzGraph *g);

// Number of edges, 0 for null.
//
// # Safety
// `g` must be null or a live handle.
uintptr_t sz_graph_size(const struct SzGraph *g);

// Wiener index of a connected graph.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum SzStatus sz_wiener(const struct SzGraph *g, uint64_t *out);

// Szeged index of a connected graph.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum SzStatus sz_szeged(const struct SzGraph *g, uint64_t *out);

// Four times the revised Szeged index (always an integer).
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum SzStatus sz_revised_szeged_x4(const struct SzGraph *g, uint64_t *out);

// `Sz/W` and `Sz*/W` as exact reduced fractions.
//
// # Safety
// `g` must be a live handle; both out-pointers must be writable.
enum SzStatus sz_ratios(const struct SzGraph *g,
                        struct SzRatio *sz_over_w,
                        struct SzRatio *szstar_over_w);

// graph6 encoding of the graph as given. Free with `sz_string_free`.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum SzStatus sz_graph_to_graph6(const struct SzGraph *g, char **out);

// Isomorphism-invariant key (graph6 of the canonical form). Free with `sz_string_free`.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum SzStatus sz_canonical_key(const struct SzGraph *g, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void sz_string_free(char *s);

// Number of isomorphism classes of `class` on `n` vertices. Subject to the
// default resource guards unless `override_guard` is nonzero.
//
// # Safety
// `out` must be writable.
enum SzStatus sz_enumerate_count(enum SzClass class_,
                                 uintptr_t n,
                                 int32_t override_guard,
                                 uint64_t *out);

// Static description of a status code.
const char *sz_status_message(enum SzStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SZEGED_H */
