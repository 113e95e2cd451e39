#pragma once

#include <cstdint>
#include <span>

#include "witness.hpp"

namespace hudg {

struct SolverConfig {
    std::uint64_t seed = 1;
    int restarts = 20;
    int max_iters = 4000;
    double margin = 0.05;  // target slack, as a fraction of the threshold
    double init_spread = 2.0;
    double step_init = 0.1;
};

// Soft relaxation of the witness predicate with an absolute margin:
// sum over edges of max(0, d - t + margin)^2 plus sum over non-edges of
// max(0, t + margin - d)^2.  Zero iff the strict witness holds with slack.
double penalty(const LabeledGraph& g, const std::vector<Point2>& points, double t, double margin);
double penalty(const LabeledGraph& g, const std::vector<HPoint>& points, double t, double margin);
double penalty(const LabeledGraph& g, const Realization& r, double margin);

// Differentiable objective used by the descent: parameters are the point
// coordinates followed by the threshold t, with the margin maintained as
// margin_frac * t.  Euclidean coordinates are (x, y) pairs; hyperbolic
// ones are polar (r, theta) pairs evaluated on the hyperboloid.
class PenaltyModel {
public:
    PenaltyModel(const LabeledGraph& g, Geometry geometry, double margin_frac);

    std::size_t num_params() const { return 2 * static_cast<std::size_t>(n_) + 1; }
    Geometry geometry() const { return geom_; }

    double value(std::span<const double> params) const;
    void gradient(std::span<const double> params, std::span<double> out) const;

    Realization realization(std::span<const double> params) const;

private:
    int n_;
    Geometry geom_;
    double margin_frac_;
    std::vector<char> adj_;
};

struct SolveResult {
    bool success = false;
    Realization realization;     // verified exactly when success; its threshold
                                 // is recentered inside `interval` for slack
    ThresholdInterval interval;  // exact-witness interval when success
    double best_penalty = 0.0;   // best penalty over all restarts (diagnostic)
    std::vector<double> restart_penalties;  // best penalty per restart
    int restarts_used = 0;
};

// Penalty minimization with seeded random restarts; every reported success
// has been re-verified by the exact witness check.  Failure returns the
// best penalty achieved and certifies nothing.
SolveResult solve_realization(const LabeledGraph& g, Geometry geometry, const SolverConfig& cfg);

}  // namespace hudg
