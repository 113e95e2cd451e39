#pragma once

#include <optional>

#include "arrangement.hpp"
#include "graph.hpp"
#include "hypgeo.hpp"

namespace hudg {

enum class Geometry { euclidean, hyperboloid };

const char* geometry_name(Geometry g);
Geometry geometry_from_name(const std::string& name);

enum class IntervalSpace { distance, bilinear_form };

// [lo, hi): max separation over edges, min separation over non-edges.
struct ThresholdInterval {
    double lo = 0.0;
    double hi = 0.0;
    IntervalSpace space = IntervalSpace::distance;

    bool feasible() const { return lo < hi; }
};

// Certificate object: one point per vertex plus an optional threshold.
struct Realization {
    Geometry geometry = Geometry::euclidean;
    std::vector<Point2> euclidean_points;
    std::vector<HPoint> hyperbolic_points;
    std::optional<double> threshold;

    std::size_t num_points() const {
        return geometry == Geometry::euclidean ? euclidean_points.size()
                                               : hyperbolic_points.size();
    }
};

struct VerifyResult {
    bool accepted = false;
    ThresholdInterval interval;
};

// Certificate check in the hyperboloid model: the interval is in
// bilinear-form space (lo = max edge B, hi = min non-edge B).  Off-sheet
// points are rejected with an exception before any comparison.
VerifyResult verify_hudg(const LabeledGraph& g, const std::vector<HPoint>& points);

// Euclidean counterpart, interval in distance space.
VerifyResult verify_udg(const LabeledGraph& g, const std::vector<Point2>& points);

// Dispatch on the realization's geometry tag.
VerifyResult verify(const LabeledGraph& g, const Realization& r);

// A distance threshold strictly inside the feasible interval: geometric
// midpoint in form space, arithmetic midpoint in distance space.
double interval_to_radius(const ThresholdInterval& iv);

// Edge set induced by thresholding separations at distance t.
std::vector<std::pair<int, int>> edges_at_threshold(const Realization& r, double t);

}  // namespace hudg
