#include "document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hudg {

namespace {

using json = nlohmann::ordered_json;

json meta_to_json(const std::map<std::string, std::string>& meta) {
    json m = json::object();
    for (const auto& [k, v] : meta)
        m[k] = v;
    return m;
}

std::map<std::string, std::string> meta_from_json(const json& j) {
    std::map<std::string, std::string> meta;
    if (!j.contains("meta"))
        return meta;
    const json& m = j.at("meta");
    if (!m.is_object())
        throw ParseError("meta must be an object of strings");
    for (const auto& [k, v] : m.items()) {
        if (!v.is_string())
            throw ParseError("meta values must be strings");
        meta[k] = v.get<std::string>();
    }
    return meta;
}

double number_field(const json& j, const char* name) {
    if (!j.is_number())
        throw ParseError(std::string(name) + " must be a number");
    return j.get<double>();
}

json realization_points(const Realization& r) {
    json pts = json::array();
    if (r.geometry == Geometry::euclidean) {
        for (const auto& p : r.euclidean_points)
            pts.push_back(json::array({p.x, p.y}));
    } else {
        for (const auto& p : r.hyperbolic_points)
            pts.push_back(json::array({p.x, p.y, p.z}));
    }
    return pts;
}

}  // namespace

Document arrangement_document(std::vector<OrientedLine> lines,
                              std::map<std::string, std::string> meta) {
    Document doc;
    doc.kind = "arrangement";
    doc.meta = std::move(meta);
    doc.lines = std::move(lines);
    return doc;
}

Document description_document(CombinatorialDescription d,
                              std::map<std::string, std::string> meta) {
    Document doc;
    doc.kind = "description";
    doc.meta = std::move(meta);
    doc.description = std::move(d);
    return doc;
}

Document graph_document(LabeledGraph g, std::map<std::string, std::string> meta) {
    Document doc;
    doc.kind = "graph";
    doc.meta = std::move(meta);
    doc.graph = std::move(g);
    return doc;
}

Document realization_document(Realization r, std::map<std::string, std::string> meta) {
    Document doc;
    doc.kind = "realization";
    doc.meta = std::move(meta);
    doc.realization = std::move(r);
    return doc;
}

std::string document_to_json(const Document& doc) {
    json j;
    j["kind"] = doc.kind;
    j["version"] = document_version;
    j["meta"] = meta_to_json(doc.meta);

    if (doc.kind == "arrangement") {
        json lines = json::array();
        for (const auto& l : doc.lines)
            lines.push_back(json{{"a", l.a}, {"b", l.b}, {"c", l.c}});
        j["lines"] = lines;
    } else if (doc.kind == "description") {
        j["n"] = doc.description.n;
        json cells = json::array();
        for (const auto& sv : doc.description.cells)
            cells.push_back(sign_vector_to_string(sv));
        j["cells"] = cells;
    } else if (doc.kind == "graph") {
        json labels = json::array();
        for (const auto& l : doc.graph.labels)
            labels.push_back(label_to_string(l));
        j["labels"] = labels;
        json edges = json::array();
        for (const auto& [u, v] : doc.graph.edges)
            edges.push_back(json::array({u, v}));
        j["edges"] = edges;
    } else if (doc.kind == "realization") {
        j["geometry"] = geometry_name(doc.realization.geometry);
        if (doc.realization.threshold)
            j["threshold"] = *doc.realization.threshold;
        else
            j["threshold"] = nullptr;
        j["points"] = realization_points(doc.realization);
    } else {
        throw ParseError("unknown document kind: " + doc.kind);
    }
    return j.dump(2) + "\n";
}

Document document_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("document must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("document needs a string \"kind\"");
    if (!j.contains("version") || !j.at("version").is_number_integer())
        throw ParseError("document needs an integer \"version\"");
    if (j.at("version").get<int>() != document_version)
        throw ParseError("unsupported document version");

    Document doc;
    doc.kind = j.at("kind").get<std::string>();
    doc.meta = meta_from_json(j);

    try {
        if (doc.kind == "arrangement") {
            if (!j.contains("lines") || !j.at("lines").is_array())
                throw ParseError("arrangement needs a \"lines\" array");
            for (const json& l : j.at("lines")) {
                if (!l.is_object())
                    throw ParseError("each line must be an object");
                doc.lines.push_back(make_line(number_field(l.at("a"), "a"),
                                              number_field(l.at("b"), "b"),
                                              number_field(l.at("c"), "c")));
            }
        } else if (doc.kind == "description") {
            if (!j.contains("n") || !j.at("n").is_number_integer())
                throw ParseError("description needs an integer \"n\"");
            doc.description.n = j.at("n").get<int>();
            if (doc.description.n < 1)
                throw ParseError("description needs n >= 1");
            if (!j.contains("cells") || !j.at("cells").is_array())
                throw ParseError("description needs a \"cells\" array");
            for (const json& c : j.at("cells")) {
                if (!c.is_string())
                    throw ParseError("cells must be sign strings");
                SignVector sv = sign_vector_from_string(c.get<std::string>());
                if (static_cast<int>(sv.size()) != doc.description.n)
                    throw ParseError("cell sign vector length must equal n");
                doc.description.cells.push_back(std::move(sv));
            }
        } else if (doc.kind == "graph") {
            if (!j.contains("labels") || !j.at("labels").is_array())
                throw ParseError("graph needs a \"labels\" array");
            for (const json& l : j.at("labels")) {
                if (!l.is_string())
                    throw ParseError("labels must be strings");
                doc.graph.add_vertex(label_from_string(l.get<std::string>()));
            }
            if (!j.contains("edges") || !j.at("edges").is_array())
                throw ParseError("graph needs an \"edges\" array");
            for (const json& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                    !e[1].is_number_integer())
                    throw ParseError("each edge must be a pair of vertex ids");
                doc.graph.add_edge(e[0].get<int>(), e[1].get<int>());
            }
        } else if (doc.kind == "realization") {
            if (!j.contains("geometry") || !j.at("geometry").is_string())
                throw ParseError("realization needs a string \"geometry\"");
            doc.realization.geometry =
                geometry_from_name(j.at("geometry").get<std::string>());
            if (j.contains("threshold") && !j.at("threshold").is_null())
                doc.realization.threshold = number_field(j.at("threshold"), "threshold");
            if (!j.contains("points") || !j.at("points").is_array())
                throw ParseError("realization needs a \"points\" array");
            const bool plane = doc.realization.geometry == Geometry::euclidean;
            const std::size_t arity = plane ? 2 : 3;
            for (const json& p : j.at("points")) {
                if (!p.is_array() || p.size() != arity)
                    throw ParseError(plane ? "euclidean points are [x, y]"
                                           : "hyperboloid points are [x, y, z]");
                if (plane)
                    doc.realization.euclidean_points.push_back(
                        Point2{number_field(p[0], "x"), number_field(p[1], "y")});
                else
                    doc.realization.hyperbolic_points.push_back(
                        HPoint{number_field(p[0], "x"), number_field(p[1], "y"),
                               number_field(p[2], "z")});
            }
        } else {
            throw ParseError("unknown document kind: " + doc.kind);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const json::exception& e) {
        throw ParseError(std::string("schema violation: ") + e.what());
    } catch (const std::exception& e) {
        // payload validators (make_line, label_from_string, add_edge, ...)
        throw ParseError(std::string("invalid payload: ") + e.what());
    }
    return doc;
}

void save_document(const Document& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open for writing: " + path);
    out << document_to_json(doc);
    if (!out)
        throw ParseError("write failed: " + path);
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return document_from_json(buf.str());
}

}  // namespace hudg
