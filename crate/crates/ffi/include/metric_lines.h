#ifndef METRIC_LINES_H
#define METRIC_LINES_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum MlStatus {
  ML_STATUS_OK = 0,
  ML_STATUS_NULL_POINTER = 1,
  ML_STATUS_INVALID_UTF8 = 2,
  ML_STATUS_PARSE = 3,
  ML_STATUS_INVALID_ARGUMENT = 4,
  ML_STATUS_TOO_LARGE = 5,
  ML_STATUS_DISCONNECTED = 6,
  ML_STATUS_TOO_FEW_VERTICES = 7,
  ML_STATUS_INTERNAL = 8,
} MlStatus;

// Opaque graph handle.
typedef struct MlGraph MlGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses graph6 or an edge list "n; u v; ...".
//
// # Safety
// `text` must be NUL-terminated; `out` must be writable.
enum MlStatus ml_graph_from_graph6(const char *text, struct MlGraph **out);

// Builds a family member. `k` = 0 means no clique size; `parts` may be
// null when `parts_len` is 0.
//
// # Safety
// `name` must be NUL-terminated, `parts` must point to `parts_len`
// values, `out` must be writable.
enum MlStatus ml_graph_from_family(const char *name,
                                   size_t k,
                                   const size_t *parts,
                                   size_t parts_len,
                                   struct MlGraph **out);

// # Safety
// `g` must come from `ml_graph_from_*` and not be freed twice. Null is ignored.
void ml_graph_free(struct MlGraph *g);

// # Safety
// `s` must come from this library. Null is ignored.
void ml_string_free(char *s);

// Message for the last failing call on this thread; empty after success.
// Valid until the next call into the library from the same thread.
const char *ml_last_error_message(void);

// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_graph_vertex_count(const struct MlGraph *g, size_t *out);

// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_graph_to_graph6(const struct MlGraph *g, char **out);

// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_line_count(const struct MlGraph *g, size_t *out);

// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_has_universal_line(const struct MlGraph *g, bool *out);

// True when the graph has a universal line or at least n lines.
//
// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_chen_chvatal_holds(const struct MlGraph *g, bool *out);

// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_diameter(const struct MlGraph *g, uint32_t *out);

// Connected and locally connected.
//
// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_is_lc(const struct MlGraph *g, bool *out);

// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_is_chordal(const struct MlGraph *g, bool *out);

// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_is_biconnected(const struct MlGraph *g, bool *out);

// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_bridge_count(const struct MlGraph *g, size_t *out);

// Line system as a JSON object.
//
// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_line_system_json(const struct MlGraph *g, char **out);

// Full property report as a JSON object.
//
// # Safety
// `g` must be a live handle, `out` writable.
enum MlStatus ml_check_properties_json(const struct MlGraph *g, char **out);

// Connected graphs on `n` vertices up to isomorphism, one graph6 record
// per line. `count` may be null.
//
// # Safety
// `out` must be writable; `count` null or writable.
enum MlStatus ml_enumerate_connected(size_t n, char **out, size_t *count);

// Library version, static storage.
const char *ml_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* METRIC_LINES_H */
