#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "document.hpp"
#include "plot.hpp"
#include "reduction.hpp"

using namespace hudg;

namespace {

CombinatorialDescription tiny_description() {
    CombinatorialDescription d;
    d.n = 2;
    d.cells = {sign_vector_from_string("--"), sign_vector_from_string("-+"),
               sign_vector_from_string("+-"), sign_vector_from_string("++")};
    return d;
}

}  // namespace

TEST_CASE("arrangement documents round trip through JSON") {
    const auto lines = random_simple_arrangement(4, 99);
    Document doc = arrangement_document(lines, {{"seed", "99"}});
    const std::string text = document_to_json(doc);
    const Document back = document_from_json(text);

    CHECK(back.kind == "arrangement");
    CHECK(back.meta.at("seed") == "99");
    REQUIRE(back.lines.size() == lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(back.lines[i].a == lines[i].a);  // exact: shortest-round-trip decimals
        CHECK(back.lines[i].b == lines[i].b);
        CHECK(back.lines[i].c == lines[i].c);
    }
}

TEST_CASE("description documents round trip and validate sign vectors") {
    Document doc = description_document(tiny_description());
    const Document back = document_from_json(document_to_json(doc));
    CHECK(back.description.n == 2);
    CHECK(back.description.cells == tiny_description().cells);

    SUBCASE("length mismatch between n and a cell is rejected") {
        const std::string bad = R"({"kind":"description","version":1,"meta":{},
            "n":3,"cells":["++","--"]})";
        CHECK_THROWS_AS(document_from_json(bad), ParseError);
    }
    SUBCASE("unknown sign characters are rejected") {
        const std::string bad = R"({"kind":"description","version":1,"meta":{},
            "n":2,"cells":["+x"]})";
        CHECK_THROWS_AS(document_from_json(bad), ParseError);
    }
}

TEST_CASE("graph documents round trip labels and edges") {
    const LabeledGraph g = build_gd(tiny_description());
    const Document back = document_from_json(document_to_json(graph_document(g)));
    CHECK(back.graph.labels.size() == g.labels.size());
    CHECK(back.graph.edges == g.edges);
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
        CHECK(back.graph.labels[i].role == g.labels[i].role);
        CHECK(back.graph.labels[i].index == g.labels[i].index);
    }
}

TEST_CASE("realization documents keep exact doubles and geometry tags") {
    Realization r;
    r.geometry = Geometry::euclidean;
    r.euclidean_points = {{0.1 + 0.2, -1.0 / 3.0}, {std::sqrt(2.0), 1e-300}};
    r.threshold = 0.30000000000000004;
    const Document back = document_from_json(document_to_json(realization_document(r)));
    CHECK(back.realization.geometry == Geometry::euclidean);
    REQUIRE(back.realization.threshold.has_value());
    CHECK(*back.realization.threshold == 0.30000000000000004);
    CHECK(back.realization.euclidean_points[0].x == 0.1 + 0.2);
    CHECK(back.realization.euclidean_points[0].y == -1.0 / 3.0);
    CHECK(back.realization.euclidean_points[1].x == std::sqrt(2.0));
    CHECK(back.realization.euclidean_points[1].y == 1e-300);

    SUBCASE("hyperbolic points carry three coordinates") {
        Realization h;
        h.geometry = Geometry::hyperboloid;
        h.hyperbolic_points = {polar_to_hyperboloid({1.5, 0.25})};
        h.threshold = std::nullopt;
        const Document hb = document_from_json(document_to_json(realization_document(h)));
        CHECK(hb.realization.geometry == Geometry::hyperboloid);
        CHECK_FALSE(hb.realization.threshold.has_value());
        CHECK(hb.realization.hyperbolic_points[0].x == h.hyperbolic_points[0].x);
        CHECK(hb.realization.hyperbolic_points[0].z == h.hyperbolic_points[0].z);
    }
}

TEST_CASE("malformed documents are rejected with ParseError") {
    CHECK_THROWS_AS(document_from_json("not json at all"), ParseError);
    CHECK_THROWS_AS(document_from_json(R"({"kind":"widget","version":1})"), ParseError);
    CHECK_THROWS_AS(document_from_json(R"({"kind":"graph","version":2,"meta":{},
        "labels":[],"edges":[]})"),
                    ParseError);
    CHECK_THROWS_AS(document_from_json(R"({"version":1,"meta":{}})"), ParseError);
    // self-loop violates the graph's own invariants
    CHECK_THROWS_AS(document_from_json(R"({"kind":"graph","version":1,"meta":{},
        "labels":["a1","a2"],"edges":[[0,0]]})"),
                    ParseError);
    // euclidean realizations use two coordinates per point
    CHECK_THROWS_AS(document_from_json(R"({"kind":"realization","version":1,"meta":{},
        "geometry":"euclidean","threshold":1.0,"points":[[0.0,0.0,1.0]]})"),
                    ParseError);
}

TEST_CASE("documents survive a save/load cycle on disk") {
    const std::string path = "test_document_tmp.json";
    Document doc = description_document(tiny_description(), {{"note", "disk trip"}});
    save_document(doc, path);
    const Document back = load_document(path);
    std::remove(path.c_str());
    CHECK(back.kind == "description");
    CHECK(back.meta.at("note") == "disk trip");
    CHECK(back.description.cells == tiny_description().cells);
    CHECK_THROWS_AS(load_document("definitely/not/a/file.json"), ParseError);
}

TEST_CASE("every document kind renders to well-formed SVG") {
    const auto lines = random_simple_arrangement(3, 5);
    const auto check_svg = [](const std::string& svg) {
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
        CHECK(svg.find("version=\"1.1\"") != std::string::npos);
        CHECK(svg.find("nan") == std::string::npos);
        CHECK(svg.find("inf") == std::string::npos);
    };

    check_svg(plot_document(arrangement_document(lines)));
    check_svg(plot_document(description_document(tiny_description())));
    check_svg(plot_document(graph_document(build_gd(tiny_description()))));

    Realization re;
    re.geometry = Geometry::euclidean;
    re.euclidean_points = {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8}};
    re.threshold = 1.1;
    check_svg(plot_document(realization_document(re)));

    Realization rh;
    rh.geometry = Geometry::hyperboloid;
    rh.hyperbolic_points = {polar_to_hyperboloid({0.0, 0.0}),
                            polar_to_hyperboloid({0.8, 1.0}),
                            polar_to_hyperboloid({1.2, -2.0})};
    rh.threshold = 1.0;
    const std::string svg = plot_document(realization_document(rh));
    check_svg(svg);
    // hyperbolic circles come out as sampled 64-gon outlines
    CHECK(svg.find("<polygon") != std::string::npos);
}
