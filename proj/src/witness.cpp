#include "witness.hpp"

#include <cmath>
#include <limits>

namespace hudg {

const char* geometry_name(Geometry g) {
    return g == Geometry::euclidean ? "euclidean" : "hyperboloid";
}

Geometry geometry_from_name(const std::string& name) {
    if (name == "euclidean")
        return Geometry::euclidean;
    if (name == "hyperboloid" || name == "hyperbolic")
        return Geometry::hyperboloid;
    throw std::invalid_argument("unknown geometry tag: " + name);
}

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

}  // namespace

VerifyResult verify_hudg(const LabeledGraph& g, const std::vector<HPoint>& points) {
    const int n = g.num_vertices();
    if (static_cast<int>(points.size()) != n)
        throw std::invalid_argument("point count does not match vertex count");
    for (const auto& p : points)
        require_on_sheet(p);

    ThresholdInterval iv{1.0, inf, IntervalSpace::bilinear_form};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double b = sheet_b(points[u], points[v]);
            if (g.adjacent(u, v))
                iv.lo = std::max(iv.lo, b);
            else
                iv.hi = std::min(iv.hi, b);
        }
    return VerifyResult{iv.feasible(), iv};
}

VerifyResult verify_udg(const LabeledGraph& g, const std::vector<Point2>& points) {
    const int n = g.num_vertices();
    if (static_cast<int>(points.size()) != n)
        throw std::invalid_argument("point count does not match vertex count");
    for (const auto& p : points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("realization coordinates must be finite");

    ThresholdInterval iv{0.0, inf, IntervalSpace::distance};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double d = dist(points[u], points[v]);
            if (g.adjacent(u, v))
                iv.lo = std::max(iv.lo, d);
            else
                iv.hi = std::min(iv.hi, d);
        }
    return VerifyResult{iv.feasible(), iv};
}

VerifyResult verify(const LabeledGraph& g, const Realization& r) {
    return r.geometry == Geometry::euclidean ? verify_udg(g, r.euclidean_points)
                                             : verify_hudg(g, r.hyperbolic_points);
}

double interval_to_radius(const ThresholdInterval& iv) {
    if (!iv.feasible())
        throw std::invalid_argument("threshold interval is infeasible");
    if (iv.space == IntervalSpace::bilinear_form) {
        const double t = std::isinf(iv.hi) ? stable_acosh(2.0 * iv.lo)
                                           : stable_acosh(std::sqrt(iv.lo * iv.hi));
        return t;
    }
    return std::isinf(iv.hi) ? iv.lo + 1.0 : 0.5 * (iv.lo + iv.hi);
}

std::vector<std::pair<int, int>> edges_at_threshold(const Realization& r, double t) {
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(r.num_points());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double d = r.geometry == Geometry::euclidean
                                 ? dist(r.euclidean_points[u], r.euclidean_points[v])
                                 : hyp_distance(r.hyperbolic_points[u], r.hyperbolic_points[v]);
            if (d <= t)
                edges.emplace_back(u, v);
        }
    return edges;
}

}  // namespace hudg
