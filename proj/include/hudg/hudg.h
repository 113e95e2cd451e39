/* hudg — hyperbolic unit-disk-graph toolkit, C interface.
 *
 * All functions that can fail return a hudg_status; HUDG_OK means the call
 * succeeded and every out parameter is valid.  On any other status the out
 * parameters are left untouched (output documents are set to NULL) and
 * hudg_last_error() returns a message for the calling thread.
 *
 * Documents are opaque JSON-backed values of four kinds: "arrangement"
 * (oriented lines), "description" (combinatorial cell description),
 * "graph" (role-labeled graph) and "realization" (points + threshold).
 * Every constructor hands ownership to the caller; release documents with
 * hudg_document_free and strings with hudg_string_free.
 */
#ifndef HUDG_H
#define HUDG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hudg_status {
    HUDG_OK = 0,            /* call succeeded */
    HUDG_REJECTED = 1,      /* verification ran and the certificate fails */
    HUDG_SOLVER_FAILED = 2, /* search exhausted its restarts without a witness */
    HUDG_INVALID = 3,       /* bad argument: null pointer, wrong kind, bad value */
    HUDG_DEGENERATE = 4,    /* input too close to a degenerate configuration */
    HUDG_PARSE_ERROR = 5    /* malformed document JSON or unreadable file */
} hudg_status;

typedef struct hudg_document hudg_document;

/* Library version string, statically allocated. */
const char* hudg_version(void);

/* Message for the most recent failing call on this thread ("" if none).
 * The pointer stays valid until the thread's next hudg call. */
const char* hudg_last_error(void);

/* Release a string returned through a char** out parameter. */
void hudg_string_free(char* s);

void hudg_document_free(hudg_document* doc);

/* ---- documents ------------------------------------------------------- */

hudg_status hudg_document_parse(const char* json, hudg_document** out);
hudg_status hudg_document_to_json(const hudg_document* doc, char** json_out);
hudg_status hudg_document_load(const char* path, hudg_document** out);
hudg_status hudg_document_save(const hudg_document* doc, const char* path);

/* Kind string ("arrangement", "description", "graph", "realization");
 * valid while the document lives.  NULL for a NULL document. */
const char* hudg_document_kind(const hudg_document* doc);

/* ---- pipeline steps --------------------------------------------------- */

/* Seeded random simple line arrangement with n lines -> "arrangement". */
hudg_status hudg_gen_arrangement(int n, uint64_t seed, hudg_document** out);

/* Enumerate the cells of an arrangement -> "description".
 * HUDG_DEGENERATE when the arrangement is not simple to tolerance. */
hudg_status hudg_cells(const hudg_document* arrangement, hudg_document** out);

/* Gadget graph of a simple description -> "graph". */
hudg_status hudg_reduce(const hudg_document* description, hudg_document** out);

/* Exact certificate check of a realization against a graph.  Returns
 * HUDG_OK when accepted and HUDG_REJECTED when not; in both cases fills
 * accepted (0/1) and the threshold interval [lo, hi).  form_space is 1
 * when the interval lives in bilinear-form space (hyperbolic geometry)
 * and 0 when it is in distance space. */
hudg_status hudg_verify(const hudg_document* graph, const hudg_document* realization,
                        int* accepted, double* lo, double* hi, int* form_space);

typedef struct hudg_solver_config {
    uint64_t seed;
    int restarts;
    int max_iters;
    double margin;      /* target slack, as a fraction of the threshold */
    double init_spread;
    double step_init;
} hudg_solver_config;

hudg_solver_config hudg_solver_config_default(void);

/* Search for a realization of the graph in the named geometry
 * ("euclidean" or "hyperbolic"/"hyperboloid").  config may be NULL for
 * defaults.  On HUDG_OK, *out is an exactly verified "realization".  On
 * HUDG_SOLVER_FAILED no witness was found; restarts_used and best_penalty
 * (when non-NULL) still report the search effort.  Each of the out
 * pointers may be NULL when the caller does not need that value. */
hudg_status hudg_solve(const hudg_document* graph, const char* geometry,
                       const hudg_solver_config* config, hudg_document** out,
                       int* restarts_used, double* best_penalty);

/* Scale an accepted Euclidean realization down until its polar coordinates
 * verify on the hyperboloid -> hyperbolic "realization".  scale_out (when
 * non-NULL) receives the accepted scale factor. */
hudg_status hudg_embed(const hudg_document* graph, const hudg_document* realization,
                       hudg_document** out, double* scale_out);

/* Recover the combinatorial description encoded by an accepted hyperbolic
 * realization of a gadget graph -> canonical "description". */
hudg_status hudg_extract(const hudg_document* graph, const hudg_document* realization,
                         hudg_document** out);

/* Render any document to a standalone SVG 1.1 string. */
hudg_status hudg_plot(const hudg_document* doc, char** svg_out);

/* Compare two descriptions up to canonical ordering; fills equal (0/1). */
hudg_status hudg_description_equal(const hudg_document* a, const hudg_document* b,
                                   int* equal);

/* Size accessors; HUDG_INVALID when the document has another kind. */
hudg_status hudg_graph_size(const hudg_document* graph, int* vertices, int* edges);
hudg_status hudg_description_size(const hudg_document* description, int* n, int* cells);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HUDG_H */
