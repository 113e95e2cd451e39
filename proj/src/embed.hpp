#pragma once

#include "witness.hpp"

namespace hudg {

inline constexpr int max_halvings = 64;

struct EmbedResult {
    Realization realization;  // hyperboloid geometry, threshold = scale * t
    double scale = 1.0;
    ThresholdInterval interval;  // bilinear-form space
};

// Shrink an accepted Euclidean realization about its centroid, reading the
// Euclidean polar coordinates as hyperbolic ones, until the hyperbolic
// verification accepts with cosh(scale * t) strictly inside the form
// interval (which reproduces exactly the input adjacencies).  Starts at
// scale 1 and halves; throws DegeneracyError after max_halvings.
EmbedResult scale_embed(const LabeledGraph& g, const std::vector<Point2>& points, double t);

}  // namespace hudg
