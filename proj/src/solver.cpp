#include "solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace hudg {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double hinge_sum(const LabeledGraph& g, const std::vector<double>& d, int n,
                 double t, double margin) {
    double acc = 0.0;
    std::size_t k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k) {
            const double e = g.adjacent(u, v) ? d[k] - t + margin : t + margin - d[k];
            if (std::isnan(e))
                return inf;  // degenerate coordinates must not read as satisfied
            if (e > 0.0)
                acc += e * e;
        }
    return acc;
}

}  // namespace

double penalty(const LabeledGraph& g, const std::vector<Point2>& points, double t, double margin) {
    const int n = g.num_vertices();
    if (static_cast<int>(points.size()) != n)
        throw std::invalid_argument("point count does not match vertex count");
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            d.push_back(dist(points[u], points[v]));
    return hinge_sum(g, d, n, t, margin);
}

double penalty(const LabeledGraph& g, const std::vector<HPoint>& points, double t, double margin) {
    const int n = g.num_vertices();
    if (static_cast<int>(points.size()) != n)
        throw std::invalid_argument("point count does not match vertex count");
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            d.push_back(hyp_distance(points[u], points[v]));
    return hinge_sum(g, d, n, t, margin);
}

double penalty(const LabeledGraph& g, const Realization& r, double margin) {
    if (!r.threshold)
        throw std::invalid_argument("realization carries no threshold");
    return r.geometry == Geometry::euclidean
               ? penalty(g, r.euclidean_points, *r.threshold, margin)
               : penalty(g, r.hyperbolic_points, *r.threshold, margin);
}

PenaltyModel::PenaltyModel(const LabeledGraph& g, Geometry geometry, double margin_frac)
    : n_(g.num_vertices()), geom_(geometry), margin_frac_(margin_frac) {
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& [u, v] : g.edges) {
        adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
        adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    }
}

double PenaltyModel::value(std::span<const double> params) const {
    const double t = params[2 * n_];
    const double margin = margin_frac_ * t;
    double acc = 0.0;
    if (geom_ == Geometry::euclidean) {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                const double d = std::hypot(params[2 * u] - params[2 * v],
                                            params[2 * u + 1] - params[2 * v + 1]);
                const double e = adj_[static_cast<std::size_t>(u) * n_ + v]
                                     ? d - t + margin
                                     : t + margin - d;
                if (std::isnan(e))
                    return inf;
                if (e > 0.0)
                    acc += e * e;
            }
        return acc;
    }
    std::vector<double> ch(n_), sh(n_);
    for (int u = 0; u < n_; ++u) {
        ch[u] = std::cosh(params[2 * u]);
        sh[u] = std::sinh(params[2 * u]);
    }
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            const double f =
                ch[u] * ch[v] - sh[u] * sh[v] * std::cos(params[2 * u + 1] - params[2 * v + 1]);
            const double d = stable_acosh(f);
            const double e = adj_[static_cast<std::size_t>(u) * n_ + v] ? d - t + margin
                                                                        : t + margin - d;
            if (std::isnan(e))
                return inf;
            if (e > 0.0)
                acc += e * e;
        }
    return acc;
}

void PenaltyModel::gradient(std::span<const double> params, std::span<double> out) const {
    std::fill(out.begin(), out.end(), 0.0);
    const double t = params[2 * n_];
    const double margin = margin_frac_ * t;

    std::vector<double> ch, sh;
    if (geom_ == Geometry::hyperboloid) {
        ch.resize(n_);
        sh.resize(n_);
        for (int u = 0; u < n_; ++u) {
            ch[u] = std::cosh(params[2 * u]);
            sh[u] = std::sinh(params[2 * u]);
        }
    }

    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            const bool edge = adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
            if (geom_ == Geometry::euclidean) {
                const double dx = params[2 * u] - params[2 * v];
                const double dy = params[2 * u + 1] - params[2 * v + 1];
                const double d = std::hypot(dx, dy);
                const double e = edge ? d - t + margin : t + margin - d;
                if (e <= 0.0)
                    continue;
                out[2 * n_] += 2.0 * e * (edge ? margin_frac_ - 1.0 : 1.0 + margin_frac_);
                if (d < 1e-12)
                    continue;  // distance kink: no descent direction for this pair
                const double w = (edge ? 2.0 * e : -2.0 * e) / d;
                out[2 * u] += w * dx;
                out[2 * u + 1] += w * dy;
                out[2 * v] -= w * dx;
                out[2 * v + 1] -= w * dy;
            } else {
                const double dth = params[2 * u + 1] - params[2 * v + 1];
                const double cos_dth = std::cos(dth);
                const double f = ch[u] * ch[v] - sh[u] * sh[v] * cos_dth;
                const double d = stable_acosh(f);
                const double e = edge ? d - t + margin : t + margin - d;
                if (e <= 0.0)
                    continue;
                out[2 * n_] += 2.0 * e * (edge ? margin_frac_ - 1.0 : 1.0 + margin_frac_);
                const double f2 = f * f - 1.0;
                if (f2 < 1e-24)
                    continue;  // coincident points: d has no gradient here
                const double w = (edge ? 2.0 * e : -2.0 * e) / std::sqrt(f2);
                const double df_dru = sh[u] * ch[v] - ch[u] * sh[v] * cos_dth;
                const double df_drv = ch[u] * sh[v] - sh[u] * ch[v] * cos_dth;
                const double df_dth = sh[u] * sh[v] * std::sin(dth);
                out[2 * u] += w * df_dru;
                out[2 * v] += w * df_drv;
                out[2 * u + 1] += w * df_dth;
                out[2 * v + 1] -= w * df_dth;
            }
        }
}

Realization PenaltyModel::realization(std::span<const double> params) const {
    Realization r;
    r.geometry = geom_;
    r.threshold = params[2 * n_];
    if (geom_ == Geometry::euclidean) {
        r.euclidean_points.resize(n_);
        for (int u = 0; u < n_; ++u)
            r.euclidean_points[u] = Point2{params[2 * u], params[2 * u + 1]};
    } else {
        r.hyperbolic_points.resize(n_);
        for (int u = 0; u < n_; ++u)
            r.hyperbolic_points[u] =
                polar_to_hyperboloid(PolarPoint{params[2 * u], normalize_angle(params[2 * u + 1])});
    }
    return r;
}

namespace {

void fixup_params(std::vector<double>& p, int n, Geometry geom) {
    if (geom == Geometry::hyperboloid)
        for (int u = 0; u < n; ++u)
            if (p[2 * u] < 0.0) {  // reflect through the origin
                p[2 * u] = -p[2 * u];
                p[2 * u + 1] += std::numbers::pi;
            }
    p[2 * n] = std::max(p[2 * n], 1e-9);
}

std::vector<double> initial_params(const LabeledGraph& g, Geometry geom,
                                   const SolverConfig& cfg, std::mt19937_64& rng) {
    const int n = g.num_vertices();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> p(2 * static_cast<std::size_t>(n) + 1);
    for (int u = 0; u < n; ++u) {
        if (geom == Geometry::euclidean) {
            const double r = cfg.init_spread * std::sqrt(unit(rng));
            const double phi = 2.0 * std::numbers::pi * unit(rng);
            p[2 * u] = r * std::cos(phi);
            p[2 * u + 1] = r * std::sin(phi);
        } else {
            p[2 * u] = cfg.init_spread * unit(rng);
            p[2 * u + 1] = 2.0 * std::numbers::pi * unit(rng);
        }
    }
    // t starts at the mean pairwise separation.
    double sum = 0.0;
    std::size_t cnt = 0;
    const PenaltyModel model(g, geom, 0.0);
    const Realization r0 = model.realization(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++cnt)
            sum += geom == Geometry::euclidean
                       ? dist(r0.euclidean_points[u], r0.euclidean_points[v])
                       : hyp_distance(r0.hyperbolic_points[u], r0.hyperbolic_points[v]);
    p[2 * n] = cnt > 0 && sum > 0.0 ? sum / static_cast<double>(cnt) : 1.0;
    return p;
}

// distance-space width of an interval
double interval_width(const ThresholdInterval& iv) {
    if (std::isinf(iv.hi))
        return inf;
    return iv.space == IntervalSpace::distance ? iv.hi - iv.lo
                                               : stable_acosh(iv.hi) - stable_acosh(iv.lo);
}

// A candidate only counts if its points are honest inputs for the verifier:
// finite in the plane, on the sheet (within tolerance) on the hyperboloid.
bool verifiable(const Realization& r) {
    if (r.geometry == Geometry::euclidean) {
        for (const auto& p : r.euclidean_points)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                return false;
        return true;
    }
    for (const auto& p : r.hyperbolic_points)
        if (!on_sheet(p))
            return false;
    return true;
}

}  // namespace

SolveResult solve_realization(const LabeledGraph& g, Geometry geometry, const SolverConfig& cfg) {
    if (g.num_vertices() < 1)
        throw std::invalid_argument("solve_realization needs a nonempty graph");
    if (cfg.restarts < 1 || cfg.margin <= 0.0)
        throw std::invalid_argument("solver config: restarts >= 1 and margin > 0 required");

    const PenaltyModel model(g, geometry, cfg.margin);
    SolveResult result;
    result.best_penalty = inf;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(restart)};
        std::mt19937_64 rng(seq);
        std::vector<double> params = initial_params(g, geometry, cfg, rng);
        std::vector<double> grad(model.num_params());
        std::vector<double> trial(model.num_params());

        double p = model.value(params);
        double step = cfg.step_init;
        bool have_grad = false;
        for (int iter = 0; iter < cfg.max_iters && p > 0.0; ++iter) {
            if (geometry == Geometry::euclidean) {
                // The Euclidean penalty is 2-homogeneous in (points, t), so
                // shrinking everything is always a descent direction that
                // solves nothing.  Re-expressing the iterate on the t = 1
                // slice removes that gauge freedom; the hyperbolic penalty
                // has intrinsic scale and needs no such fix.
                double& t = params[2 * static_cast<std::size_t>(g.num_vertices())];
                if (std::fabs(t - 1.0) > 1e-12) {
                    const double inv = 1.0 / t;
                    for (double& x : params)
                        x *= inv;
                    t = 1.0;
                    p = model.value(params);
                    have_grad = false;
                    if (p == 0.0)
                        break;
                }
            }
            if (!have_grad) {
                model.gradient(params, grad);
                have_grad = true;
            }
            double g2 = 0.0;
            for (double gi : grad)
                g2 += gi * gi;
            if (g2 == 0.0)
                break;
            for (std::size_t i = 0; i < params.size(); ++i)
                trial[i] = params[i] - step * grad[i];
            fixup_params(trial, g.num_vertices(), geometry);
            const double pt = model.value(trial);
            if (pt < p) {
                params.swap(trial);
                p = pt;
                step *= 1.1;
                have_grad = false;
            } else {
                step *= 0.5;
                if (step < 1e-15)
                    break;
            }
        }

        result.restart_penalties.push_back(p);
        result.best_penalty = std::min(result.best_penalty, p);
        // The margined penalty often stalls at a small positive value while
        // the strict witness already holds (the margin only shapes the
        // objective, it is not part of the predicate), so every restart's
        // endpoint gets the exact check.
        Realization r = model.realization(params);
        if (!verifiable(r))
            continue;  // numerically degenerate endpoint; try the next restart
        const VerifyResult vr = verify(g, r);
        if (vr.accepted) {
            // Center the threshold in the certified interval so the returned
            // witness carries the maximal slack the points allow, and demand
            // that the interval is at least one margin wide.
            const double t = interval_to_radius(vr.interval);
            if (interval_width(vr.interval) >= cfg.margin * t * (1.0 - 1e-6)) {
                r.threshold = t;
                result.success = true;
                result.realization = std::move(r);
                result.interval = vr.interval;
                result.restarts_used = restart + 1;
                return result;
            }
        }
    }
    result.restarts_used = cfg.restarts;
    return result;
}

}  // namespace hudg
