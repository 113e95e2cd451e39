// C ABI shim over the C++ core: exceptions become status codes, documents
// become opaque handles, strings cross the boundary as owned copies.
#include "hudg/hudg.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "document.hpp"
#include "embed.hpp"
#include "extract.hpp"
#include "hypgeo.hpp"
#include "plot.hpp"
#include "reduction.hpp"
#include "solver.hpp"
#include "witness.hpp"

struct hudg_document {
    hudg::Document doc;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

hudg_status fail(hudg_status s, const std::string& msg) {
    set_error(msg);
    return s;
}

// Runs the body and maps thrown exceptions onto the status enum.
template <typename Fn>
hudg_status guarded(Fn&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const hudg::ParseError& e) {
        return fail(HUDG_PARSE_ERROR, e.what());
    } catch (const hudg::DegeneracyError& e) {
        return fail(HUDG_DEGENERATE, e.what());
    } catch (const std::exception& e) {
        return fail(HUDG_INVALID, e.what());
    } catch (...) {
        return fail(HUDG_INVALID, "unknown error");
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hudg_document* wrap(hudg::Document doc) { return new hudg_document{std::move(doc)}; }

bool require_kind(const hudg_document* doc, const char* kind, std::string& err) {
    if (!doc) {
        err = "null document";
        return false;
    }
    if (doc->doc.kind != kind) {
        err = std::string("expected a ") + kind + " document, got " + doc->doc.kind;
        return false;
    }
    return true;
}

}  // namespace

extern "C" {

const char* hudg_version(void) { return "1.0.0"; }

const char* hudg_last_error(void) { return g_last_error.c_str(); }

void hudg_string_free(char* s) { delete[] s; }

void hudg_document_free(hudg_document* doc) { delete doc; }

hudg_status hudg_document_parse(const char* json, hudg_document** out) {
    return guarded([&]() -> hudg_status {
        if (!json || !out)
            return fail(HUDG_INVALID, "null argument");
        *out = wrap(hudg::document_from_json(json));
        return HUDG_OK;
    });
}

hudg_status hudg_document_to_json(const hudg_document* doc, char** json_out) {
    return guarded([&]() -> hudg_status {
        if (!doc || !json_out)
            return fail(HUDG_INVALID, "null argument");
        *json_out = copy_string(hudg::document_to_json(doc->doc));
        return HUDG_OK;
    });
}

hudg_status hudg_document_load(const char* path, hudg_document** out) {
    return guarded([&]() -> hudg_status {
        if (!path || !out)
            return fail(HUDG_INVALID, "null argument");
        *out = wrap(hudg::load_document(path));
        return HUDG_OK;
    });
}

hudg_status hudg_document_save(const hudg_document* doc, const char* path) {
    return guarded([&]() -> hudg_status {
        if (!doc || !path)
            return fail(HUDG_INVALID, "null argument");
        hudg::save_document(doc->doc, path);
        return HUDG_OK;
    });
}

const char* hudg_document_kind(const hudg_document* doc) {
    return doc ? doc->doc.kind.c_str() : nullptr;
}

hudg_status hudg_gen_arrangement(int n, uint64_t seed, hudg_document** out) {
    return guarded([&]() -> hudg_status {
        if (!out)
            return fail(HUDG_INVALID, "null argument");
        if (n < 1)
            return fail(HUDG_INVALID, "line count must be positive");
        auto lines = hudg::random_simple_arrangement(n, seed);
        *out = wrap(hudg::arrangement_document(
            std::move(lines), {{"seed", std::to_string(seed)}}));
        return HUDG_OK;
    });
}

hudg_status hudg_cells(const hudg_document* arrangement, hudg_document** out) {
    return guarded([&]() -> hudg_status {
        std::string err;
        if (!out)
            return fail(HUDG_INVALID, "null argument");
        if (!require_kind(arrangement, "arrangement", err))
            return fail(HUDG_INVALID, err);
        auto enumeration = hudg::enumerate_cells(arrangement->doc.lines);
        *out = wrap(hudg::description_document(std::move(enumeration.description)));
        return HUDG_OK;
    });
}

hudg_status hudg_reduce(const hudg_document* description, hudg_document** out) {
    return guarded([&]() -> hudg_status {
        std::string err;
        if (!out)
            return fail(HUDG_INVALID, "null argument");
        if (!require_kind(description, "description", err))
            return fail(HUDG_INVALID, err);
        *out = wrap(hudg::graph_document(hudg::build_gd(description->doc.description)));
        return HUDG_OK;
    });
}

hudg_status hudg_verify(const hudg_document* graph, const hudg_document* realization,
                        int* accepted, double* lo, double* hi, int* form_space) {
    return guarded([&]() -> hudg_status {
        std::string err;
        if (!require_kind(graph, "graph", err) ||
            !require_kind(realization, "realization", err))
            return fail(HUDG_INVALID, err);
        const hudg::VerifyResult vr =
            hudg::verify(graph->doc.graph, realization->doc.realization);
        if (accepted)
            *accepted = vr.accepted ? 1 : 0;
        if (lo)
            *lo = vr.interval.lo;
        if (hi)
            *hi = vr.interval.hi;
        if (form_space)
            *form_space = vr.interval.space == hudg::IntervalSpace::bilinear_form ? 1 : 0;
        if (!vr.accepted)
            return fail(HUDG_REJECTED, "certificate rejected: infeasible threshold interval");
        return HUDG_OK;
    });
}

hudg_solver_config hudg_solver_config_default(void) {
    const hudg::SolverConfig d;
    hudg_solver_config c;
    c.seed = d.seed;
    c.restarts = d.restarts;
    c.max_iters = d.max_iters;
    c.margin = d.margin;
    c.init_spread = d.init_spread;
    c.step_init = d.step_init;
    return c;
}

hudg_status hudg_solve(const hudg_document* graph, const char* geometry,
                       const hudg_solver_config* config, hudg_document** out,
                       int* restarts_used, double* best_penalty) {
    return guarded([&]() -> hudg_status {
        std::string err;
        if (!require_kind(graph, "graph", err))
            return fail(HUDG_INVALID, err);
        if (!geometry || !out)
            return fail(HUDG_INVALID, "null argument");
        const hudg::Geometry geom = hudg::geometry_from_name(geometry);
        hudg::SolverConfig cfg;
        if (config) {
            cfg.seed = config->seed;
            cfg.restarts = config->restarts;
            cfg.max_iters = config->max_iters;
            cfg.margin = config->margin;
            cfg.init_spread = config->init_spread;
            cfg.step_init = config->step_init;
        }
        hudg::SolveResult result = hudg::solve_realization(graph->doc.graph, geom, cfg);
        if (restarts_used)
            *restarts_used = result.restarts_used;
        if (best_penalty)
            *best_penalty = result.best_penalty;
        if (!result.success) {
            *out = nullptr;
            return fail(HUDG_SOLVER_FAILED, "no witness found within the restart budget");
        }
        *out = wrap(hudg::realization_document(std::move(result.realization)));
        return HUDG_OK;
    });
}

hudg_status hudg_embed(const hudg_document* graph, const hudg_document* realization,
                       hudg_document** out, double* scale_out) {
    return guarded([&]() -> hudg_status {
        std::string err;
        if (!out)
            return fail(HUDG_INVALID, "null argument");
        if (!require_kind(graph, "graph", err) ||
            !require_kind(realization, "realization", err))
            return fail(HUDG_INVALID, err);
        const hudg::Realization& r = realization->doc.realization;
        if (r.geometry != hudg::Geometry::euclidean)
            return fail(HUDG_INVALID, "embedding starts from a euclidean realization");
        if (!r.threshold)
            return fail(HUDG_INVALID, "realization carries no threshold");
        hudg::EmbedResult er =
            hudg::scale_embed(graph->doc.graph, r.euclidean_points, *r.threshold);
        if (scale_out)
            *scale_out = er.scale;
        *out = wrap(hudg::realization_document(std::move(er.realization)));
        return HUDG_OK;
    });
}

hudg_status hudg_extract(const hudg_document* graph, const hudg_document* realization,
                         hudg_document** out) {
    return guarded([&]() -> hudg_status {
        std::string err;
        if (!out)
            return fail(HUDG_INVALID, "null argument");
        if (!require_kind(graph, "graph", err) ||
            !require_kind(realization, "realization", err))
            return fail(HUDG_INVALID, err);
        const hudg::Realization& r = realization->doc.realization;
        if (r.geometry != hudg::Geometry::hyperboloid)
            return fail(HUDG_INVALID, "extraction needs a hyperbolic realization");
        hudg::CombinatorialDescription d =
            hudg::extract_description(graph->doc.graph, r.hyperbolic_points);
        hudg::canonicalize(d);
        *out = wrap(hudg::description_document(std::move(d)));
        return HUDG_OK;
    });
}

hudg_status hudg_plot(const hudg_document* doc, char** svg_out) {
    return guarded([&]() -> hudg_status {
        if (!doc || !svg_out)
            return fail(HUDG_INVALID, "null argument");
        *svg_out = copy_string(hudg::plot_document(doc->doc));
        return HUDG_OK;
    });
}

hudg_status hudg_description_equal(const hudg_document* a, const hudg_document* b,
                                   int* equal) {
    return guarded([&]() -> hudg_status {
        std::string err;
        if (!equal)
            return fail(HUDG_INVALID, "null argument");
        if (!require_kind(a, "description", err) || !require_kind(b, "description", err))
            return fail(HUDG_INVALID, err);
        hudg::CombinatorialDescription da = a->doc.description;
        hudg::CombinatorialDescription db = b->doc.description;
        hudg::canonicalize(da);
        hudg::canonicalize(db);
        *equal = (da.n == db.n && da.cells == db.cells) ? 1 : 0;
        return HUDG_OK;
    });
}

hudg_status hudg_graph_size(const hudg_document* graph, int* vertices, int* edges) {
    return guarded([&]() -> hudg_status {
        std::string err;
        if (!require_kind(graph, "graph", err))
            return fail(HUDG_INVALID, err);
        if (vertices)
            *vertices = graph->doc.graph.num_vertices();
        if (edges)
            *edges = static_cast<int>(graph->doc.graph.num_edges());
        return HUDG_OK;
    });
}

hudg_status hudg_description_size(const hudg_document* description, int* n, int* cells) {
    return guarded([&]() -> hudg_status {
        std::string err;
        if (!require_kind(description, "description", err))
            return fail(HUDG_INVALID, err);
        if (n)
            *n = description->doc.description.n;
        if (cells)
            *cells = static_cast<int>(description->doc.description.cells.size());
        return HUDG_OK;
    });
}

}  // extern "C"
