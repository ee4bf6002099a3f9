/* dc3col — linear-time 3-colouring and recognition for dually chordal graphs.
 *
 * C API over the C++ core. All functions returning dc_status use DC_OK for
 * success; on failure dc_last_error() gives a descriptive message for the
 * calling thread. Graphs are opaque handles owned by the caller via
 * dc_graph_free(). Vertices are dense 0-based int32 ids.
 */
#ifndef DC3COL_H
#define DC3COL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DC_API __declspec(dllexport)
#else
#define DC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dc_graph dc_graph;

typedef enum dc_status {
    DC_OK = 0,
    DC_ERROR_ARGUMENT = 1,
    DC_ERROR_LOOP_EDGE = 2,
    DC_ERROR_VERTEX_RANGE = 3,
    DC_ERROR_PARSE = 4,
    DC_ERROR_TOO_LARGE = 5,
    DC_ERROR_DISCONNECTED = 6,
    DC_ERROR_IO = 7,
    DC_ERROR_VERIFICATION = 8,
    DC_ERROR_NO_COMPATIBLE_TREE = 9,
    DC_ERROR_PRECONDITION = 10,
    DC_ERROR_INTERNAL = 11
} dc_status;

typedef enum dc_color_verdict {
    DC_COLORED = 0,
    DC_NOT_THREE_COLORABLE = 1,
    DC_NOT_APPLICABLE = 2
} dc_color_verdict;

DC_API const char* dc_status_name(dc_status status);

/* Message for the last failing call on this thread; empty string if none. */
DC_API const char* dc_last_error(void);

/* ---- construction and serialization ---- */

/* endpoints holds 2*edge_count vertex ids (u0, v0, u1, v1, ...). */
DC_API dc_status dc_graph_from_edges(int32_t n, const int32_t* endpoints, int64_t edge_count,
                                     dc_graph** out);
DC_API dc_status dc_graph_parse_dimacs(const char* text, dc_graph** out);
DC_API dc_status dc_graph_read_dimacs(const char* path, dc_graph** out);
DC_API dc_status dc_graph_write_dimacs(const dc_graph* g, const char* path);
/* Caller frees the returned text with dc_text_free. */
DC_API dc_status dc_graph_format_dimacs(const dc_graph* g, char** out_text);
DC_API void dc_graph_free(dc_graph* g);
DC_API void dc_text_free(char* text);

/* ---- accessors ---- */

DC_API int32_t dc_graph_vertex_count(const dc_graph* g);
DC_API int64_t dc_graph_edge_count(const dc_graph* g);
DC_API int dc_graph_has_edge(const dc_graph* g, int32_t u, int32_t v);
DC_API int32_t dc_graph_degree(const dc_graph* g, int32_t v);
/* Copies the sorted neighbour list of v; *out_len receives its length.
 * Fails with DC_ERROR_ARGUMENT when the buffer is too small. */
DC_API dc_status dc_graph_neighbors(const dc_graph* g, int32_t v, int32_t* buf, int32_t buf_len,
                                    int32_t* out_len);
DC_API int dc_graph_is_connected(const dc_graph* g);

/* ---- recognition ---- */

/* *found is 1 iff the graph admits a maximum neighbourhood ordering.
 * When found and the arrays are non-null (length n), `order` receives the
 * elimination order and `witness` the per-position maximum neighbour. */
DC_API dc_status dc_find_mno(const dc_graph* g, int* found, int32_t* order, int32_t* witness);

/* ---- structure ---- */

DC_API dc_status dc_blocks_locally_connected(const dc_graph* g, int* result);
/* witness_vertex (optional) receives a violating vertex when result is 0. */
DC_API dc_status dc_is_locally_connected(const dc_graph* g, int* result, int32_t* witness_vertex);
/* *found is 1 iff a 4-clique exists; quad (optional) receives it. */
DC_API dc_status dc_find_k4(const dc_graph* g, int* found, int32_t quad[4]);

/* ---- colouring ---- */

/* checked != 0 first tests that all blocks are locally connected and yields
 * DC_NOT_APPLICABLE when they are not. colors (length n) receives values
 * 1..3 when the verdict is DC_COLORED. */
DC_API dc_status dc_three_color(const dc_graph* g, int checked, dc_color_verdict* verdict,
                                int32_t* colors);
DC_API dc_status dc_two_color(const dc_graph* g, int* found, int32_t* colors);
/* 1 iff colors (length n, values 1..max_colors) is a proper total colouring. */
DC_API int dc_validate_coloring(const dc_graph* g, const int32_t* colors, int32_t max_colors);

/* ---- generation ---- */

/* family is one of "duallyChordal", "k4FreeDuallyChordal",
 * "locallyConnectedBlocks", "connectedRandom". Identical arguments always
 * produce the identical graph. */
DC_API dc_status dc_generate(const char* family, int32_t n, double density, uint64_t seed,
                             dc_graph** out);
DC_API dc_status dc_add_universal_vertex(const dc_graph* g, dc_graph** out);

/* ---- property checks ---- */

/* property is one of "tree", "theorem3", "lemma3", "lemma4", "construction".
 * *holds reports the verdict; *report_json (optional, dc_text_free) receives
 * a JSON object with the individual findings. */
DC_API dc_status dc_check_property(const dc_graph* g, const char* property, int* holds,
                                   char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* DC3COL_H */
