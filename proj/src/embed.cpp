#include "embed.hpp"

namespace hudg {

EmbedResult scale_embed(const LabeledGraph& g, const std::vector<Point2>& points, double t) {
    const VerifyResult vr = verify_udg(g, points);
    if (!vr.accepted || !(vr.interval.lo < t && t < vr.interval.hi))
        throw std::invalid_argument(
            "scale_embed needs an accepted Euclidean realization with t strictly inside its interval");

    Point2 center{0.0, 0.0};
    for (auto p : points)
        center = center + p;
    if (!points.empty())
        center = (1.0 / static_cast<double>(points.size())) * center;

    std::vector<PolarPoint> polar(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point2 d = points[i] - center;
        polar[i].r = norm(d);
        polar[i].theta = polar[i].r > 0.0 ? normalize_angle(std::atan2(d.y, d.x)) : 0.0;
    }

    double s = 1.0;
    for (int halving = 0; halving <= max_halvings; ++halving, s *= 0.5) {
        std::vector<HPoint> hpts(points.size());
        bool representable = true;
        for (std::size_t i = 0; i < points.size(); ++i) {
            hpts[i] = polar_to_hyperboloid(PolarPoint{s * polar[i].r, polar[i].theta});
            if (!on_sheet(hpts[i])) {
                // Far from the origin the sheet constraint cannot be met to
                // tolerance in double precision; such a scale is simply not
                // certifiable yet, so keep halving.
                representable = false;
                break;
            }
        }
        if (!representable)
            continue;
        const VerifyResult hv = verify_hudg(g, hpts);
        const double tau = std::cosh(s * t);
        if (hv.accepted && hv.interval.lo < tau && tau < hv.interval.hi) {
            Realization r;
            r.geometry = Geometry::hyperboloid;
            r.hyperbolic_points = std::move(hpts);
            r.threshold = s * t;
            return EmbedResult{std::move(r), s, hv.interval};
        }
    }
    throw DegeneracyError("scale_embed did not stabilize within 64 halvings; "
                          "the Euclidean certificate has no slack");
}

}  // namespace hudg
