#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace hudg {

namespace {

constexpr int circle_samples = 64;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const char* role_color(Role r) {
    switch (r) {
        case Role::a: return "#c0392b";
        case Role::b: return "#2471a3";
        case Role::c: return "#1e8449";
        default: return "#202020";
    }
}

struct Box {
    double x0 = -1.0, y0 = -1.0, x1 = 1.0, y1 = 1.0;

    void include(Point2 p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
    void pad(double m) {
        x0 -= m;
        y0 -= m;
        x1 += m;
        y1 += m;
    }
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

// SVG y grows downward; flip so the plots read like the math.
class Svg {
public:
    Svg(Box box, double pixels) : box_(box) {
        scale_ = pixels / std::max(box.width(), box.height());
        w_ = box.width() * scale_;
        h_ = box.height() * scale_;
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
             << fmt(w_) << "\" height=\"" << fmt(h_) << "\" viewBox=\"0 0 " << fmt(w_)
             << " " << fmt(h_) << "\">\n"
             << "<rect width=\"100%\" height=\"100%\" fill=\"#fdfdfd\"/>\n";
    }

    double X(double x) const { return (x - box_.x0) * scale_; }
    double Y(double y) const { return h_ - (y - box_.y0) * scale_; }

    void line(Point2 a, Point2 b, const char* color, double width, const char* dash = nullptr) {
        out_ << "<line x1=\"" << fmt(X(a.x)) << "\" y1=\"" << fmt(Y(a.y)) << "\" x2=\""
             << fmt(X(b.x)) << "\" y2=\"" << fmt(Y(b.y)) << "\" stroke=\"" << color
             << "\" stroke-width=\"" << fmt(width) << "\"";
        if (dash)
            out_ << " stroke-dasharray=\"" << dash << "\"";
        out_ << "/>\n";
    }

    void circle(Point2 c, double r_px, const char* fill, const char* stroke) {
        out_ << "<circle cx=\"" << fmt(X(c.x)) << "\" cy=\"" << fmt(Y(c.y)) << "\" r=\""
             << fmt(r_px) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
             << "\" stroke-width=\"1\"/>\n";
    }

    void scaled_circle(Point2 c, double r_world, const char* fill, const char* stroke) {
        out_ << "<circle cx=\"" << fmt(X(c.x)) << "\" cy=\"" << fmt(Y(c.y)) << "\" r=\""
             << fmt(r_world * scale_) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
             << "\" stroke-width=\"1\" fill-opacity=\"0.12\"/>\n";
    }

    void polygon(const std::vector<Point2>& pts, const char* fill, const char* stroke) {
        out_ << "<polygon points=\"";
        for (const auto& p : pts)
            out_ << fmt(X(p.x)) << "," << fmt(Y(p.y)) << " ";
        out_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke
             << "\" stroke-width=\"1\" fill-opacity=\"0.12\"/>\n";
    }

    void text(Point2 at, const std::string& s, const char* color, double size_px) {
        out_ << "<text x=\"" << fmt(X(at.x)) << "\" y=\"" << fmt(Y(at.y)) << "\" fill=\""
             << color << "\" font-family=\"monospace\" font-size=\"" << fmt(size_px)
             << "\">" << escape(s) << "</text>\n";
    }

    void raw_text(double px, double py, const std::string& s, double size_px) {
        out_ << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(py)
             << "\" fill=\"#202020\" font-family=\"monospace\" font-size=\""
             << fmt(size_px) << "\">" << escape(s) << "</text>\n";
    }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    static std::string escape(const std::string& s) {
        std::string r;
        for (char c : s) {
            if (c == '&')
                r += "&amp;";
            else if (c == '<')
                r += "&lt;";
            else if (c == '>')
                r += "&gt;";
            else
                r += c;
        }
        return r;
    }

    Box box_;
    double scale_ = 1.0;
    double w_ = 0.0, h_ = 0.0;
    std::ostringstream out_;
};

// Clip the infinite line to a padded box by walking from the foot of the
// perpendicular in both directions.
void draw_line_in_box(Svg& svg, const Box& box, const OrientedLine& l, const char* color) {
    const Point2 center{0.5 * (box.x0 + box.x1), 0.5 * (box.y0 + box.y1)};
    const Point2 foot = center - l.eval(center) * l.normal();
    const double reach = std::hypot(box.width(), box.height());
    const Point2 d = l.direction();
    svg.line(foot - reach * d, foot + reach * d, color, 1.5);
}

std::string plot_arrangement(const std::vector<OrientedLine>& lines) {
    Box box;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double den = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (std::fabs(den) > 1e-12)
                box.include(line_intersection(lines[i], lines[j]));
        }
    box.pad(0.2 * std::max(box.width(), box.height()) + 0.5);

    Svg svg(box, 640.0);
    static const char* palette[] = {"#c0392b", "#2471a3", "#1e8449", "#9a7d0a",
                                    "#6c3483", "#117864", "#a04000", "#515a5a"};
    for (std::size_t i = 0; i < lines.size(); ++i)
        draw_line_in_box(svg, box, lines[i], palette[i % 8]);
    return svg.finish();
}

std::string plot_description(const CombinatorialDescription& d) {
    const double row = 18.0;
    Box box;
    box.x0 = 0.0;
    box.y0 = 0.0;
    box.x1 = 240.0;
    box.y1 = row * (static_cast<double>(d.cells.size()) + 3.0);
    Svg svg(box, std::max(box.width(), box.height()));  // 1 px per unit
    double y = row * 1.2;
    svg.raw_text(10.0, y, "description: n = " + std::to_string(d.n), 14.0);
    y += row * 1.5;
    for (const auto& sv : d.cells) {
        svg.raw_text(24.0, y, sign_vector_to_string(sv), 14.0);
        y += row;
    }
    return svg.finish();
}

std::string plot_graph(const LabeledGraph& g) {
    const int n = g.num_vertices();
    Box box{-1.3, -1.3, 1.3, 1.3};
    Svg svg(box, 640.0);

    std::vector<Point2> pos(n);
    for (int i = 0; i < n; ++i) {
        const double ang = 2.0 * std::numbers::pi * i / std::max(n, 1);
        pos[i] = Point2{std::cos(ang), std::sin(ang)};
    }
    for (const auto& [u, v] : g.edges)
        svg.line(pos[u], pos[v], "#b0b0b0", 1.0);
    for (int i = 0; i < n; ++i) {
        svg.circle(pos[i], 5.0, role_color(g.labels[i].role), "#202020");
        svg.text(pos[i] + Point2{0.04, 0.04}, label_to_string(g.labels[i]), "#202020", 13.0);
    }
    return svg.finish();
}

std::string plot_realization_euclidean(const Realization& r) {
    Box box;
    for (const auto& p : r.euclidean_points)
        box.include(p);
    const double t = r.threshold.value_or(0.0);
    box.pad(0.6 * t + 0.2);
    Svg svg(box, 640.0);

    if (r.threshold) {
        for (const auto& p : r.euclidean_points)
            svg.scaled_circle(p, 0.5 * t, "#2471a3", "#2471a3");
        const auto edges = edges_at_threshold(r, t);
        for (const auto& [u, v] : edges)
            svg.line(r.euclidean_points[u], r.euclidean_points[v], "#707070", 1.2);
    }
    for (const auto& p : r.euclidean_points)
        svg.circle(p, 3.0, "#202020", "#202020");
    return svg.finish();
}

// Isometry of the hyperboloid taking the origin to the given point:
// rotate(theta) o boost(r) applied to p.
HPoint translate_from_origin(const PolarPoint& to, const HPoint& p) {
    const double ch = std::cosh(to.r), sh = std::sinh(to.r);
    const double bx = ch * p.x + sh * p.z;
    const double by = p.y;
    const double bz = sh * p.x + ch * p.z;
    const double c = std::cos(to.theta), s = std::sin(to.theta);
    return HPoint{c * bx - s * by, s * bx + c * by, bz};
}

std::string plot_realization_hyperbolic(const Realization& r) {
    Box box{-1.08, -1.08, 1.08, 1.08};
    Svg svg(box, 640.0);
    svg.scaled_circle(Point2{0.0, 0.0}, 1.0, "none", "#202020");

    std::vector<Point2> klein(r.hyperbolic_points.size());
    std::vector<PolarPoint> polar(r.hyperbolic_points.size());
    for (std::size_t i = 0; i < r.hyperbolic_points.size(); ++i) {
        const KPoint k = hyperboloid_to_klein(r.hyperbolic_points[i]);
        klein[i] = Point2{k.x, k.y};
        polar[i] = hyperboloid_to_polar(r.hyperbolic_points[i]);
    }

    if (r.threshold) {
        const double rho = 0.5 * *r.threshold;
        for (const auto& center : polar) {
            std::vector<Point2> ring(circle_samples);
            for (int k = 0; k < circle_samples; ++k) {
                const double phi = 2.0 * std::numbers::pi * k / circle_samples;
                const HPoint on_origin_circle = polar_to_hyperboloid(PolarPoint{rho, phi});
                const HPoint moved = translate_from_origin(center, on_origin_circle);
                ring[k] = Point2{moved.x / moved.z, moved.y / moved.z};
            }
            svg.polygon(ring, "#1e8449", "#1e8449");
        }
        const auto edges = edges_at_threshold(r, *r.threshold);
        for (const auto& [u, v] : edges)
            svg.line(klein[u], klein[v], "#707070", 1.2);  // geodesics are chords
    }
    for (const auto& p : klein)
        svg.circle(p, 3.0, "#202020", "#202020");
    return svg.finish();
}

}  // namespace

std::string plot_document(const Document& doc) {
    if (doc.kind == "arrangement")
        return plot_arrangement(doc.lines);
    if (doc.kind == "description")
        return plot_description(doc.description);
    if (doc.kind == "graph")
        return plot_graph(doc.graph);
    if (doc.kind == "realization")
        return doc.realization.geometry == Geometry::euclidean
                   ? plot_realization_euclidean(doc.realization)
                   : plot_realization_hyperbolic(doc.realization);
    throw ParseError("unknown document kind: " + doc.kind);
}

}  // namespace hudg
