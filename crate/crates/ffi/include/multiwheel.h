#ifndef MULTIWHEEL_H
#define MULTIWHEEL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MwStatus {
  MW_OK = 0,
  MW_NULL_POINTER = 1,
  MW_INVALID_UTF8 = 2,
  MW_PARSE_ERROR = 3,
  MW_CONSTRUCT_ERROR = 4,
  MW_INVALID_ARGUMENT = 5,
  MW_PANIC = 6,
} MwStatus;

/**
 * Opaque graph handle.
 */
typedef struct MwGraph MwGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. Valid until the next
 * failing call on the same thread; never NULL.
 */
const char *mw_last_error(void);

/**
 * Builds a graph from a spec literal such as `w:1rr-1rr-1rr` or `g:q=2`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MwStatus mw_graph_from_spec(const char *spec, struct MwGraph **out);

/**
 * Decodes a graph6 string.
 *
 * # Safety
 * `g6` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MwStatus mw_graph_from_graph6(const char *g6, struct MwGraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void mw_graph_free(struct MwGraph *g);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void mw_string_free(char *s);

/**
 * # Safety
 * Pointers must be valid.
 */
enum MwStatus mw_graph_vertex_count(const struct MwGraph *g, size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum MwStatus mw_graph_edge_count(const struct MwGraph *g, size_t *out);

/**
 * graph6 encoding; free with `mw_string_free`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum MwStatus mw_graph_to_graph6(const struct MwGraph *g, char **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum MwStatus mw_chromatic_number(const struct MwGraph *g, uint32_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum MwStatus mw_is_planar(const struct MwGraph *g, bool *out);

/**
 * Chromatic number 4 and every edge and vertex deletion 3-colorable.
 *
 * # Safety
 * Pointers must be valid.
 */
enum MwStatus mw_is_4_critical(const struct MwGraph *g, bool *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum MwStatus mw_has_minor(const struct MwGraph *host, const struct MwGraph *pattern, bool *out);

/**
 * Whether the octahedron minus an edge is a minor of `g` and the octahedron is not.
 *
 * # Safety
 * Pointers must be valid.
 */
enum MwStatus mw_octahedral_bracket(const struct MwGraph *g, bool *out);

/**
 * Verification bundle as JSON. `checks` is a comma-separated subset of
 * `color,critical,planar,quad,bracket`; NULL means all of them. `all_pass`
 * may be NULL.
 *
 * # Safety
 * Pointers must be valid.
 */
enum MwStatus mw_verify_json(const struct MwGraph *g,
                             const char *checks,
                             char **out,
                             bool *all_pass);

/**
 * Library version, static storage.
 */
const char *mw_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MULTIWHEEL_H */
