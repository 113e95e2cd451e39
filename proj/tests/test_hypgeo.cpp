#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypgeo.hpp"

using namespace hudg;

namespace {

HPoint polar(double r, double theta_deg) {
    return polar_to_hyperboloid(PolarPoint{r, theta_deg * std::numbers::pi / 180.0});
}

HPoint rotate_z(const HPoint& p, double alpha) {
    return HPoint{p.x * std::cos(alpha) - p.y * std::sin(alpha),
                  p.x * std::sin(alpha) + p.y * std::cos(alpha), p.z};
}

std::vector<HPoint> seeded_points(std::size_t count, double r_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(0.0, r_max);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * std::numbers::pi);
    std::vector<HPoint> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        pts.push_back(polar_to_hyperboloid(PolarPoint{ur(rng), ut(rng)}));
    return pts;
}

}  // namespace

TEST_CASE("minkowski form on reference points") {
    const HPoint origin{0.0, 0.0, 1.0};
    CHECK(minkowski_b(origin, origin) == doctest::Approx(1.0).epsilon(1e-15));

    const HPoint p1{std::sinh(1.0), 0.0, std::cosh(1.0)};
    CHECK(minkowski_b(origin, p1) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(minkowski_b(p1, origin) == doctest::Approx(minkowski_b(origin, p1)).epsilon(1e-15));

    // Oracle: law-of-cosines value cosh^2(2) - sinh^2(2) cos(60 deg).
    const double expected = std::cosh(2.0) * std::cosh(2.0) -
                            std::sinh(2.0) * std::sinh(2.0) * 0.5;
    CHECK(expected == doctest::Approx(7.5770582090041217).epsilon(1e-12));
    CHECK(minkowski_b(polar(2.0, 0.0), polar(2.0, 60.0)) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("hyperbolic distance on reference points") {
    const HPoint origin{0.0, 0.0, 1.0};
    CHECK(hyp_distance(origin, origin) == 0.0);

    const HPoint p1{std::sinh(1.0), 0.0, std::cosh(1.0)};
    CHECK(hyp_distance(origin, p1) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(hyp_distance(polar(2.0, 0.0), polar(2.0, 60.0)) ==
          doctest::Approx(2.713888980148613).epsilon(1e-12));
}

TEST_CASE("distance rejects off-sheet points") {
    CHECK_THROWS_AS(hyp_distance(HPoint{0.0, 0.0, 0.5}, HPoint{0.0, 0.0, 1.0}),
                    std::exception);
    CHECK_THROWS_AS(require_on_sheet(HPoint{0.0, 0.0, -1.0}), std::invalid_argument);
}

TEST_CASE("model conversions on reference points") {
    const HPoint h0 = klein_to_hyperboloid(KPoint{0.0, 0.0});
    CHECK(h0.x == 0.0);
    CHECK(h0.y == 0.0);
    CHECK(h0.z == 1.0);

    const HPoint h1 = polar_to_hyperboloid(PolarPoint{1.0, 0.0});
    CHECK(h1.x == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(h1.y == doctest::Approx(0.0));
    CHECK(h1.z == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));

    const KPoint k1 = hyperboloid_to_klein(HPoint{std::sinh(1.0), 0.0, std::cosh(1.0)});
    CHECK(k1.x == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
    CHECK(k1.y == doctest::Approx(0.0));

    CHECK_THROWS_AS(klein_to_hyperboloid(KPoint{1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(hyperboloid_to_klein(HPoint{1.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("seeded on-sheet points have pairwise form >= 1") {
    const auto pts = seeded_points(1000, 10.0, 20240001);
    double min_b = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            min_b = std::min(min_b, minkowski_b(pts[i], pts[j]));
    CHECK(min_b >= 1.0 - 1e-9);
}

TEST_CASE("model round trips reproduce inputs") {
    // r stays below ~8: at radius r the sheet constraint can only be met to
    // about cosh(r)^2 ulps, and the conversions gate on 1e-9 absolute
    std::mt19937_64 rng(20240002);
    std::uniform_real_distribution<double> ur(0.0, 7.0);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 1000; ++i) {
        const double r = ur(rng), theta = ut(rng);
        const PolarPoint pp{r, theta};

        const PolarPoint back = hyperboloid_to_polar(polar_to_hyperboloid(pp));
        CHECK(std::fabs(back.r - r) <= 1e-9);
        if (r > 1e-12) {
            double dth = std::fabs(normalize_angle(back.theta - theta));
            dth = std::min(dth, 2.0 * std::numbers::pi - dth);
            CHECK(dth <= 1e-9);
        }

        const KPoint k{std::tanh(r) * std::cos(theta), std::tanh(r) * std::sin(theta)};
        const KPoint kback = hyperboloid_to_klein(klein_to_hyperboloid(k));
        CHECK(std::fabs(kback.x - k.x) <= 1e-9);
        CHECK(std::fabs(kback.y - k.y) <= 1e-9);

        // full chain klein -> hyperboloid -> polar -> hyperboloid -> klein
        const PolarPoint mid = hyperboloid_to_polar(klein_to_hyperboloid(k));
        const KPoint chain = hyperboloid_to_klein(polar_to_hyperboloid(mid));
        CHECK(std::fabs(chain.x - k.x) <= 1e-9);
        CHECK(std::fabs(chain.y - k.y) <= 1e-9);
    }
}

TEST_CASE("radial distance equals polar radius") {
    const HPoint origin{0.0, 0.0, 1.0};
    std::mt19937_64 rng(20240003);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * std::numbers::pi);
    for (double r : {0.01, 0.1, 1.0, 5.0, 10.0})
        for (int i = 0; i < 50; ++i) {
            const HPoint p = polar_to_hyperboloid(PolarPoint{r, ut(rng)});
            CHECK(std::fabs(hyp_distance(origin, p) - r) <= 1e-9);
        }
}

TEST_CASE("triangle inequality on seeded triples") {
    const auto pts = seeded_points(3000, 2.5, 20240004);
    for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
        const double ab = hyp_distance(pts[i], pts[i + 1]);
        const double bc = hyp_distance(pts[i + 1], pts[i + 2]);
        const double ac = hyp_distance(pts[i], pts[i + 2]);
        CHECK(ac <= ab + bc + 1e-9);
    }
}

TEST_CASE("z-axis rotation is an isometry") {
    const auto pts = seeded_points(40, 5.0, 20240005);
    std::mt19937_64 rng(20240006);
    std::uniform_real_distribution<double> ua(0.0, 2.0 * std::numbers::pi);
    const double alpha = ua(rng);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double before = hyp_distance(pts[i], pts[j]);
            const double after = hyp_distance(rotate_z(pts[i], alpha), rotate_z(pts[j], alpha));
            CHECK(std::fabs(before - after) <= 1e-9);
        }
}
