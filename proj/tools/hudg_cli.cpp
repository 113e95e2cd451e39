// Command-line front end over the hudg C API.  Every command prints a
// one-line JSON verdict on stdout; progress and reports go to stderr.
// Exit codes: 0 accept/success, 1 reject/failure, 2 invalid input.
#include <hudg/hudg.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::ordered_json;

// Owning handle so early returns cannot leak documents.
struct Doc {
    hudg_document* p = nullptr;
    Doc() = default;
    Doc(const Doc&) = delete;
    Doc& operator=(const Doc&) = delete;
    ~Doc() { hudg_document_free(p); }
    hudg_document** out() { return &p; }
    hudg_document* get() const { return p; }
};

int status_exit(hudg_status s) {
    switch (s) {
        case HUDG_OK:
            return 0;
        case HUDG_REJECTED:
        case HUDG_SOLVER_FAILED:
            return 1;
        default:
            return 2;
    }
}

const char* status_word(hudg_status s) {
    switch (s) {
        case HUDG_OK:
            return "ok";
        case HUDG_REJECTED:
            return "rejected";
        case HUDG_SOLVER_FAILED:
            return "failed";
        case HUDG_DEGENERATE:
            return "degenerate";
        case HUDG_PARSE_ERROR:
            return "parse-error";
        default:
            return "invalid";
    }
}

void emit(const ordered_json& verdict) { std::cout << verdict.dump() << std::endl; }

int fail_command(const std::string& command, hudg_status s) {
    emit(ordered_json{{"command", command},
                      {"status", status_word(s)},
                      {"error", hudg_last_error()}});
    return status_exit(s);
}

int save_and_report(const std::string& command, const Doc& doc, const std::string& out_path,
                    ordered_json verdict) {
    if (hudg_status s = hudg_document_save(doc.get(), out_path.c_str()); s != HUDG_OK)
        return fail_command(command, s);
    verdict["out"] = out_path;
    emit(verdict);
    return 0;
}

struct SolveFlags {
    std::uint64_t seed = 0;
    int restarts = 0;
    int max_iters = 0;
    double margin = 0.0;
    double init_spread = 0.0;
    double step_init = 0.0;

    SolveFlags() {
        const hudg_solver_config d = hudg_solver_config_default();
        seed = d.seed;
        restarts = d.restarts;
        max_iters = d.max_iters;
        margin = d.margin;
        init_spread = d.init_spread;
        step_init = d.step_init;
    }

    hudg_solver_config config() const {
        hudg_solver_config c;
        c.seed = seed;
        c.restarts = restarts;
        c.max_iters = max_iters;
        c.margin = margin;
        c.init_spread = init_spread;
        c.step_init = step_init;
        return c;
    }

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--solver-seed", seed, "random restart seed");
        cmd->add_option("--restarts", restarts, "restart budget");
        cmd->add_option("--iters", max_iters, "descent iterations per restart");
        cmd->add_option("--margin", margin, "target slack as a fraction of the threshold");
        cmd->add_option("--spread", init_spread, "initial point spread");
        cmd->add_option("--step", step_init, "initial step size");
    }
};

int run_gen(int n, std::uint64_t seed, const std::string& out_path) {
    Doc doc;
    if (hudg_status s = hudg_gen_arrangement(n, seed, doc.out()); s != HUDG_OK)
        return fail_command("gen-arrangement", s);
    std::cerr << "generated simple arrangement: n=" << n << " seed=" << seed << "\n";
    return save_and_report("gen-arrangement", doc, out_path,
                           ordered_json{{"command", "gen-arrangement"},
                                        {"status", "ok"},
                                        {"n", n},
                                        {"seed", seed}});
}

int run_cells(const std::string& in_path, const std::string& out_path) {
    Doc arr, desc;
    if (hudg_status s = hudg_document_load(in_path.c_str(), arr.out()); s != HUDG_OK)
        return fail_command("cells", s);
    if (hudg_status s = hudg_cells(arr.get(), desc.out()); s != HUDG_OK)
        return fail_command("cells", s);
    int n = 0, cells = 0;
    hudg_description_size(desc.get(), &n, &cells);
    std::cerr << "enumerated " << cells << " cells of " << n << " lines\n";
    return save_and_report("cells", desc, out_path,
                           ordered_json{{"command", "cells"},
                                        {"status", "ok"},
                                        {"n", n},
                                        {"cells", cells}});
}

int run_reduce(const std::string& in_path, const std::string& out_path) {
    Doc desc, graph;
    if (hudg_status s = hudg_document_load(in_path.c_str(), desc.out()); s != HUDG_OK)
        return fail_command("reduce", s);
    if (hudg_status s = hudg_reduce(desc.get(), graph.out()); s != HUDG_OK)
        return fail_command("reduce", s);
    int v = 0, e = 0;
    hudg_graph_size(graph.get(), &v, &e);
    std::cerr << "gadget graph: " << v << " vertices, " << e << " edges\n";
    return save_and_report("reduce", graph, out_path,
                           ordered_json{{"command", "reduce"},
                                        {"status", "ok"},
                                        {"vertices", v},
                                        {"edges", e}});
}

int run_verify(const std::string& graph_path, const std::string& realization_path) {
    Doc graph, realization;
    if (hudg_status s = hudg_document_load(graph_path.c_str(), graph.out()); s != HUDG_OK)
        return fail_command("verify", s);
    if (hudg_status s = hudg_document_load(realization_path.c_str(), realization.out());
        s != HUDG_OK)
        return fail_command("verify", s);
    int accepted = 0, form_space = 0;
    double lo = 0.0, hi = 0.0;
    const hudg_status s =
        hudg_verify(graph.get(), realization.get(), &accepted, &lo, &hi, &form_space);
    if (s != HUDG_OK && s != HUDG_REJECTED)
        return fail_command("verify", s);
    std::cerr << (accepted ? "accepted" : "rejected") << ": threshold interval [" << lo
              << ", " << hi << ") in " << (form_space ? "bilinear-form" : "distance")
              << " space\n";
    emit(ordered_json{{"command", "verify"},
                      {"status", accepted ? "accepted" : "rejected"},
                      {"accepted", accepted != 0},
                      {"lo", lo},
                      {"hi", hi},
                      {"space", form_space ? "bilinear_form" : "distance"}});
    return status_exit(s);
}

int run_solve(const std::string& graph_path, const std::string& geometry,
              const SolveFlags& flags, const std::string& out_path) {
    Doc graph, realization;
    if (hudg_status s = hudg_document_load(graph_path.c_str(), graph.out()); s != HUDG_OK)
        return fail_command("solve", s);
    const hudg_solver_config cfg = flags.config();
    int restarts_used = 0;
    double best_penalty = 0.0;
    const hudg_status s = hudg_solve(graph.get(), geometry.c_str(), &cfg, realization.out(),
                                     &restarts_used, &best_penalty);
    if (s == HUDG_SOLVER_FAILED) {
        std::cerr << "no witness after " << restarts_used
                  << " restarts; best penalty " << best_penalty << "\n";
        emit(ordered_json{{"command", "solve"},
                          {"status", "failed"},
                          {"geometry", geometry},
                          {"restarts_used", restarts_used},
                          {"best_penalty", best_penalty},
                          {"error", hudg_last_error()}});
        return 1;
    }
    if (s != HUDG_OK)
        return fail_command("solve", s);
    std::cerr << "witness found at restart " << restarts_used << " (verified exactly)\n";
    return save_and_report("solve", realization, out_path,
                           ordered_json{{"command", "solve"},
                                        {"status", "ok"},
                                        {"geometry", geometry},
                                        {"restarts_used", restarts_used},
                                        {"best_penalty", best_penalty}});
}

int run_embed(const std::string& graph_path, const std::string& realization_path,
              const std::string& out_path) {
    Doc graph, realization, hyperbolic;
    if (hudg_status s = hudg_document_load(graph_path.c_str(), graph.out()); s != HUDG_OK)
        return fail_command("embed", s);
    if (hudg_status s = hudg_document_load(realization_path.c_str(), realization.out());
        s != HUDG_OK)
        return fail_command("embed", s);
    double scale = 0.0;
    if (hudg_status s = hudg_embed(graph.get(), realization.get(), hyperbolic.out(), &scale);
        s != HUDG_OK)
        return fail_command("embed", s);
    std::cerr << "hyperbolic embedding accepted at scale " << scale << "\n";
    return save_and_report("embed", hyperbolic, out_path,
                           ordered_json{{"command", "embed"},
                                        {"status", "ok"},
                                        {"scale", scale}});
}

int run_extract(const std::string& graph_path, const std::string& realization_path,
                const std::string& out_path) {
    Doc graph, realization, desc;
    if (hudg_status s = hudg_document_load(graph_path.c_str(), graph.out()); s != HUDG_OK)
        return fail_command("extract", s);
    if (hudg_status s = hudg_document_load(realization_path.c_str(), realization.out());
        s != HUDG_OK)
        return fail_command("extract", s);
    if (hudg_status s = hudg_extract(graph.get(), realization.get(), desc.out()); s != HUDG_OK)
        return fail_command("extract", s);
    int n = 0, cells = 0;
    hudg_description_size(desc.get(), &n, &cells);
    std::cerr << "recovered description: " << cells << " cells of " << n << " lines\n";
    return save_and_report("extract", desc, out_path,
                           ordered_json{{"command", "extract"},
                                        {"status", "ok"},
                                        {"n", n},
                                        {"cells", cells}});
}

int run_plot(const std::string& in_path, const std::string& out_path) {
    Doc doc;
    if (hudg_status s = hudg_document_load(in_path.c_str(), doc.out()); s != HUDG_OK)
        return fail_command("plot", s);
    char* svg = nullptr;
    if (hudg_status s = hudg_plot(doc.get(), &svg); s != HUDG_OK)
        return fail_command("plot", s);
    const std::string body = svg;
    hudg_string_free(svg);
    std::ofstream file(out_path, std::ios::binary);
    file << body;
    if (!file) {
        emit(ordered_json{{"command", "plot"},
                          {"status", "invalid"},
                          {"error", "cannot write " + out_path}});
        return 2;
    }
    std::cerr << "wrote " << body.size() << " bytes of SVG for kind "
              << hudg_document_kind(doc.get()) << "\n";
    emit(ordered_json{{"command", "plot"},
                      {"status", "ok"},
                      {"kind", hudg_document_kind(doc.get())},
                      {"bytes", body.size()},
                      {"out", out_path}});
    return 0;
}

int run_pipeline(int n, std::uint64_t seed, const SolveFlags& flags,
                 const std::string& out_dir) {
    const auto save_step = [&](const Doc& doc, const std::string& name) -> bool {
        if (out_dir.empty())
            return true;
        const std::string path = out_dir + "/" + name + ".json";
        return hudg_document_save(doc.get(), path.c_str()) == HUDG_OK;
    };

    Doc arr;
    if (hudg_status s = hudg_gen_arrangement(n, seed, arr.out()); s != HUDG_OK)
        return fail_command("pipeline", s);
    std::cerr << "[1/7] arrangement: n=" << n << " seed=" << seed << "\n";

    Doc desc;
    if (hudg_status s = hudg_cells(arr.get(), desc.out()); s != HUDG_OK)
        return fail_command("pipeline", s);
    int cells = 0;
    hudg_description_size(desc.get(), nullptr, &cells);
    std::cerr << "[2/7] cells: " << cells << "\n";

    Doc graph;
    if (hudg_status s = hudg_reduce(desc.get(), graph.out()); s != HUDG_OK)
        return fail_command("pipeline", s);
    int vertices = 0, edges = 0;
    hudg_graph_size(graph.get(), &vertices, &edges);
    std::cerr << "[3/7] gadget graph: " << vertices << " vertices, " << edges << " edges\n";

    Doc euclidean;
    const hudg_solver_config cfg = flags.config();
    int restarts_used = 0;
    double best_penalty = 0.0;
    if (hudg_status s = hudg_solve(graph.get(), "euclidean", &cfg, euclidean.out(),
                                   &restarts_used, &best_penalty);
        s != HUDG_OK) {
        std::cerr << "[4/7] solve failed after " << restarts_used
                  << " restarts; best penalty " << best_penalty << "\n";
        emit(ordered_json{{"command", "pipeline"},
                          {"status", status_word(s)},
                          {"n", n},
                          {"seed", seed},
                          {"restarts_used", restarts_used},
                          {"best_penalty", best_penalty},
                          {"error", hudg_last_error()}});
        return status_exit(s);
    }
    std::cerr << "[4/7] solve(euclidean): witness at restart " << restarts_used << "/"
              << cfg.restarts << "\n";

    Doc hyperbolic;
    double scale = 0.0;
    if (hudg_status s = hudg_embed(graph.get(), euclidean.get(), hyperbolic.out(), &scale);
        s != HUDG_OK)
        return fail_command("pipeline", s);
    std::cerr << "[5/7] embed: scale " << scale << "\n";

    int accepted = 0, form_space = 0;
    double lo = 0.0, hi = 0.0;
    if (hudg_status s = hudg_verify(graph.get(), hyperbolic.get(), &accepted, &lo, &hi,
                                    &form_space);
        s != HUDG_OK)
        return fail_command("pipeline", s);
    std::cerr << "[6/7] verify(hyperboloid): accepted, interval [" << lo << ", " << hi
              << ")\n";

    Doc recovered;
    if (hudg_status s = hudg_extract(graph.get(), hyperbolic.get(), recovered.out());
        s != HUDG_OK)
        return fail_command("pipeline", s);
    int equal = 0;
    if (hudg_status s = hudg_description_equal(desc.get(), recovered.get(), &equal);
        s != HUDG_OK)
        return fail_command("pipeline", s);
    std::cerr << "[7/7] extract: description round trip "
              << (equal ? "equal" : "MISMATCH") << "\n";

    if (!save_step(arr, "arrangement") || !save_step(desc, "description") ||
        !save_step(graph, "graph") || !save_step(euclidean, "realization_euclidean") ||
        !save_step(hyperbolic, "realization_hyperbolic") ||
        !save_step(recovered, "description_recovered")) {
        emit(ordered_json{{"command", "pipeline"},
                          {"status", "invalid"},
                          {"error", std::string("cannot write to ") + out_dir + ": " +
                                        hudg_last_error()}});
        return 2;
    }

    ordered_json verdict{{"command", "pipeline"},
                         {"status", equal ? "ok" : "failed"},
                         {"n", n},
                         {"seed", seed},
                         {"cells", cells},
                         {"vertices", vertices},
                         {"edges", edges},
                         {"restarts_used", restarts_used},
                         {"scale", scale},
                         {"interval", ordered_json{{"lo", lo}, {"hi", hi}}},
                         {"match", equal != 0}};
    if (!equal)
        verdict["error"] = "recovered description differs from the original";
    if (!out_dir.empty())
        verdict["out_dir"] = out_dir;
    emit(verdict);
    return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic unit disk graph toolkit"};
    app.require_subcommand(1);

    int n = 3;
    std::uint64_t seed = 1;
    std::string in_path, out_path, graph_path, realization_path, geometry, out_dir;
    SolveFlags solve_flags;
    SolveFlags pipeline_flags;
    // The pipeline's solver works against gadget graphs, whose stall
    // structure wants a thin margin and a deep restart budget.
    pipeline_flags.margin = 0.002;
    pipeline_flags.restarts = 1000;

    CLI::App* gen = app.add_subcommand("gen-arrangement", "seeded random simple arrangement");
    gen->add_option("--n", n, "number of lines")->required();
    gen->add_option("--seed", seed, "generator seed")->required();
    gen->add_option("--out", out_path, "output arrangement file")->required();

    CLI::App* cells = app.add_subcommand("cells", "enumerate arrangement cells");
    cells->add_option("--in", in_path, "arrangement file")->required();
    cells->add_option("--out", out_path, "output description file")->required();

    CLI::App* reduce = app.add_subcommand("reduce", "gadget graph of a description");
    reduce->add_option("--in", in_path, "description file")->required();
    reduce->add_option("--out", out_path, "output graph file")->required();

    CLI::App* verify = app.add_subcommand("verify", "check a realization certificate");
    verify->add_option("--graph", graph_path, "graph file")->required();
    verify->add_option("--realization", realization_path, "realization file")->required();

    CLI::App* solve = app.add_subcommand("solve", "search for a realization");
    solve->add_option("--graph", graph_path, "graph file")->required();
    solve->add_option("--geometry", geometry, "euclidean or hyperbolic")->required();
    solve->add_option("--seed", solve_flags.seed, "random restart seed");
    solve_flags.add_flags(solve);
    solve->add_option("--out", out_path, "output realization file")->required();

    CLI::App* embed = app.add_subcommand("embed", "scale a euclidean witness onto the hyperboloid");
    embed->add_option("--graph", graph_path, "graph file")->required();
    embed->add_option("--realization", realization_path, "euclidean realization file")->required();
    embed->add_option("--out", out_path, "output hyperbolic realization file")->required();

    CLI::App* extract = app.add_subcommand("extract", "recover a description from a hyperbolic witness");
    extract->add_option("--graph", graph_path, "gadget graph file")->required();
    extract->add_option("--realization", realization_path, "hyperbolic realization file")->required();
    extract->add_option("--out", out_path, "output description file")->required();

    CLI::App* pipeline = app.add_subcommand("pipeline", "run the full round trip end to end");
    pipeline->add_option("--n", n, "number of lines")->required();
    pipeline->add_option("--seed", seed, "arrangement seed")->required();
    pipeline->add_option("--out-dir", out_dir, "directory for per-step document files");
    pipeline_flags.add_flags(pipeline);

    CLI::App* plot = app.add_subcommand("plot", "render any document to SVG");
    plot->add_option("--in", in_path, "document file")->required();
    plot->add_option("--out", out_path, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // bad flags are invalid input
    }

    if (gen->parsed())
        return run_gen(n, seed, out_path);
    if (cells->parsed())
        return run_cells(in_path, out_path);
    if (reduce->parsed())
        return run_reduce(in_path, out_path);
    if (verify->parsed())
        return run_verify(graph_path, realization_path);
    if (solve->parsed())
        return run_solve(graph_path, geometry, solve_flags, out_path);
    if (embed->parsed())
        return run_embed(graph_path, realization_path, out_path);
    if (extract->parsed())
        return run_extract(graph_path, realization_path, out_path);
    if (pipeline->parsed())
        return run_pipeline(n, seed, pipeline_flags, out_dir);
    if (plot->parsed())
        return run_plot(in_path, out_path);
    return 2;
}
