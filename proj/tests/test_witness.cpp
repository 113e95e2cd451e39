#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "witness.hpp"

using namespace hudg;

namespace {

HPoint polar(double r, double theta_deg) {
    return polar_to_hyperboloid(PolarPoint{r, theta_deg * std::numbers::pi / 180.0});
}

// center + 6 leaves on a hyperbolic circle of radius r
std::vector<HPoint> hyperbolic_hexagon_star(double r) {
    std::vector<HPoint> pts = {HPoint{0.0, 0.0, 1.0}};
    for (int k = 0; k < 6; ++k) pts.push_back(polar(r, 60.0 * k));
    return pts;
}

}  // namespace

TEST_CASE("two-leaf star in the hyperboloid model") {
    const LabeledGraph star = star_graph(2);
    const std::vector<HPoint> pts = {HPoint{0.0, 0.0, 1.0}, polar(2.0, 0.0), polar(2.0, 60.0)};
    const VerifyResult res = verify_hudg(star, pts);
    CHECK(res.accepted);
    CHECK(res.interval.space == IntervalSpace::bilinear_form);
    CHECK(res.interval.lo == doctest::Approx(3.7621956910836315).epsilon(1e-12));
    CHECK(res.interval.hi == doctest::Approx(7.5770582090041217).epsilon(1e-12));

    const double t = interval_to_radius(res.interval);
    CHECK(t == doctest::Approx(2.359323428966032).epsilon(1e-12));
    CHECK(std::cosh(t) == doctest::Approx(5.3391362358536202).epsilon(1e-12));

    // thresholding at t reproduces exactly the star's edges
    Realization r;
    r.geometry = Geometry::hyperboloid;
    r.hyperbolic_points = pts;
    CHECK(edges_at_threshold(r, t) == star.edges);
}

TEST_CASE("six-leaf star accepted in hyperbolic, rejected in euclidean") {
    const LabeledGraph star = star_graph(6);

    const VerifyResult hyp = verify_hudg(star, hyperbolic_hexagon_star(2.0));
    CHECK(hyp.accepted);
    CHECK(hyp.interval.lo == doctest::Approx(std::cosh(2.0)).epsilon(1e-12));
    CHECK(hyp.interval.hi == doctest::Approx(7.5770582090041217).epsilon(1e-12));

    // regular unit hexagon: adjacent leaves sit exactly at the edge length,
    // so no threshold separates edges from non-edges
    std::vector<Point2> flat = {Point2{0.0, 0.0}};
    for (int k = 0; k < 6; ++k) {
        const double th = k * std::numbers::pi / 3.0;
        flat.push_back(Point2{std::cos(th), std::sin(th)});
    }
    const VerifyResult euc = verify_udg(star, flat);
    CHECK_FALSE(euc.accepted);
    CHECK(euc.interval.lo == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(euc.interval.hi <= euc.interval.lo + 1e-12);
}

TEST_CASE("threshold sweep matches the reported interval") {
    const LabeledGraph star = star_graph(6);
    Realization r;
    r.geometry = Geometry::hyperboloid;
    r.hyperbolic_points = hyperbolic_hexagon_star(2.0);
    const VerifyResult res = verify_hudg(star, r.hyperbolic_points);
    REQUIRE(res.accepted);

    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const double t = 0.5 + 4.0 * i / 99.0;
        const double form = std::cosh(t);
        if (std::fabs(form - res.interval.lo) < 1e-9 ||
            std::fabs(form - res.interval.hi) < 1e-9)
            continue;  // exactly on a boundary: ownership is a tie
        const bool inside = form >= res.interval.lo && form < res.interval.hi;
        const bool matches = edges_at_threshold(r, t) == star.edges;
        CHECK(matches == inside);
        ++checked;
    }
    CHECK(checked >= 95);
}

TEST_CASE("unit square as a euclidean disk graph") {
    LabeledGraph c4;
    for (int i = 0; i < 4; ++i) c4.add_vertex();
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(0, 3);
    const std::vector<Point2> square = {Point2{0, 0}, Point2{1, 0}, Point2{1, 1}, Point2{0, 1}};
    const VerifyResult res = verify_udg(c4, square);
    CHECK(res.accepted);
    CHECK(res.interval.space == IntervalSpace::distance);
    CHECK(res.interval.lo == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.interval.hi == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(interval_to_radius(res.interval) ==
          doctest::Approx(0.5 * (1.0 + std::sqrt(2.0))).epsilon(1e-12));

    // diagonals included makes it complete: open-ended interval
    c4.add_edge(0, 2);
    c4.add_edge(1, 3);
    const VerifyResult complete = verify_udg(c4, square);
    CHECK(complete.accepted);
    CHECK(complete.interval.lo == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::isinf(complete.interval.hi));
    CHECK(interval_to_radius(complete.interval) ==
          doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-12));
}

TEST_CASE("open-ended hyperbolic interval radius") {
    // complete graph on two points at distance 2: lo = cosh 2, hi = inf
    LabeledGraph k2 = complete_graph(2);
    const std::vector<HPoint> pts = {HPoint{0.0, 0.0, 1.0}, polar(2.0, 0.0)};
    const VerifyResult res = verify_hudg(k2, pts);
    CHECK(res.accepted);
    CHECK(std::isinf(res.interval.hi));
    CHECK(interval_to_radius(res.interval) ==
          doctest::Approx(std::acosh(2.0 * std::cosh(2.0))).epsilon(1e-12));
}

TEST_CASE("edgeless graphs and rejection cases") {
    LabeledGraph e2;
    e2.add_vertex();
    e2.add_vertex();
    const std::vector<HPoint> apart = {HPoint{0.0, 0.0, 1.0}, polar(1.0, 0.0)};
    const VerifyResult res = verify_hudg(e2, apart);
    CHECK(res.accepted);
    CHECK(res.interval.lo == doctest::Approx(1.0));  // form-space floor

    // coincident points can never be split into non-adjacent vertices
    const std::vector<HPoint> same = {polar(1.0, 0.0), polar(1.0, 0.0)};
    CHECK_FALSE(verify_hudg(e2, same).accepted);

    // arity mismatch and off-sheet points are input errors, not rejections
    CHECK_THROWS_AS(verify_hudg(e2, {HPoint{0.0, 0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_hudg(e2, {HPoint{0.0, 0.0, 1.0}, HPoint{0.0, 0.0, -1.0}}),
                    std::invalid_argument);

    // non-finite plane coordinates are input errors too, never a silent accept
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(verify_udg(e2, {Point2{0.0, 0.0}, Point2{nan, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_udg(e2, {Point2{inf, -inf}, Point2{1.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("geometry names round trip") {
    CHECK(geometry_from_name("euclidean") == Geometry::euclidean);
    CHECK(geometry_from_name("hyperboloid") == Geometry::hyperboloid);
    CHECK(geometry_from_name("hyperbolic") == Geometry::hyperboloid);
    CHECK(geometry_name(Geometry::euclidean) == std::string("euclidean"));
    CHECK(geometry_name(Geometry::hyperboloid) == std::string("hyperboloid"));
    CHECK_THROWS_AS(geometry_from_name("spherical"), std::invalid_argument);
}

TEST_CASE("verify dispatches on geometry") {
    Realization r;
    r.geometry = Geometry::euclidean;
    r.euclidean_points = {Point2{0, 0}, Point2{1, 0}};
    LabeledGraph k2 = complete_graph(2);
    CHECK(verify(k2, r).accepted);
    CHECK(verify(k2, r).interval.space == IntervalSpace::distance);
}
