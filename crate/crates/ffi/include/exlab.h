#ifndef EXLAB_H
#define EXLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum {
  EXLAB_STATUS_OK = 0,
  EXLAB_STATUS_PARAMETER = 1,
  EXLAB_STATUS_FORMAT = 2,
  EXLAB_STATUS_ARGUMENT = 3,
  EXLAB_STATUS_DOMAIN = 4,
  EXLAB_STATUS_SIZE = 5,
  EXLAB_STATUS_BUDGET = 6,
  EXLAB_STATUS_INTERNAL = 7,
  EXLAB_STATUS_NULL_POINTER = 8,
  EXLAB_STATUS_INVALID_UTF8 = 9,
} ExlabStatus;

typedef enum {
  EXLAB_KIND_DETERMINING = 0,
  EXLAB_KIND_RESOLVING = 1,
} ExlabKind;

/**
 * Opaque graph handle.
 */
typedef struct ExlabGraph ExlabGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph6 string into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
ExlabStatus exlab_graph_from_graph6(const char *text, ExlabGraph **out);

/**
 * Builds a family member (`"cycle"`, `"wheel"`, `"kneser"`, ...). `seed` is
 * used only when `has_seed` is true.
 *
 * # Safety
 * `family` must be NUL-terminated, `params` must point to `len` values (or
 * be null when `len` is 0) and `out` must be valid.
 */
ExlabStatus exlab_graph_generate(const char *family,
                                 const uint64_t *params,
                                 size_t len,
                                 uint64_t seed,
                                 bool has_seed,
                                 ExlabGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void exlab_graph_free(ExlabGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t exlab_graph_vertex_count(const ExlabGraph *g);

/**
 * Writes the graph6 encoding to `*out`; free it with `exlab_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
ExlabStatus exlab_graph_to_graph6(const ExlabGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void exlab_string_free(char *s);

/**
 * # Safety
 * `g` must be a live handle, `ids` must point to `len` vertex ids and `out`
 * must be valid.
 */
ExlabStatus exlab_is_determining(const ExlabGraph *g, const uint32_t *ids, size_t len, bool *out);

/**
 * # Safety
 * As for `exlab_is_determining`.
 */
ExlabStatus exlab_is_resolving(const ExlabGraph *g, const uint32_t *ids, size_t len, bool *out);

/**
 * Smallest determining set size. A `budget` of 0 means the default.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
ExlabStatus exlab_determining_number(const ExlabGraph *g, uint64_t budget_limit, size_t *out);

/**
 * Smallest resolving set size. A `budget` of 0 means the default.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
ExlabStatus exlab_metric_dimension(const ExlabGraph *g, uint64_t budget_limit, size_t *out);

/**
 * The exchange report as JSON in `*out`; free it with `exlab_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
ExlabStatus exlab_exchange_report_json(const ExlabGraph *g,
                                       ExlabKind kind,
                                       uint64_t budget_limit,
                                       char **out);

/**
 * Message for the last failure on this thread, or an empty string. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *exlab_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EXLAB_H */
