#include "hypgeo.hpp"

#include <numbers>

namespace hudg {

double minkowski_q(const HPoint& p) {
    return p.z * p.z - p.x * p.x - p.y * p.y;
}

bool on_sheet(const HPoint& p, double tol) {
    return p.z > 0.0 && std::fabs(minkowski_q(p) - 1.0) <= tol;
}

void require_on_sheet(const HPoint& p, double tol) {
    if (!on_sheet(p, tol))
        throw std::invalid_argument("point is not on the forward hyperboloid sheet");
}

double minkowski_b(const HPoint& u, const HPoint& v) {
    return u.z * v.z - u.x * v.x - u.y * v.y;
}

double sheet_b(const HPoint& u, const HPoint& v) {
    const double dx = u.x - v.x;
    const double dy = u.y - v.y;
    const double dz = u.z - v.z;
    return 1.0 + 0.5 * (dx * dx + dy * dy - dz * dz);
}

double stable_acosh(double x) {
    double d = x - 1.0;
    if (d < 0.0)
        d = 0.0;
    return std::log1p(d + std::sqrt(d * (x + 1.0)));
}

double hyp_distance(const HPoint& u, const HPoint& v) {
    // B - 1 = (dx^2 + dy^2 - dz^2) / 2 for on-sheet points; the difference
    // form avoids the cancellation of the direct bilinear form when the
    // points are close together.
    const double dx = u.x - v.x;
    const double dy = u.y - v.y;
    const double dz = u.z - v.z;
    double d = 0.5 * (dx * dx + dy * dy - dz * dz);
    if (d < -on_sheet_tolerance)
        throw std::domain_error("bilinear form below 1: points not on-sheet");
    if (d < 0.0)
        d = 0.0;
    return std::log1p(d + std::sqrt(d * (d + 2.0)));
}

double normalize_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t < 0.0)
        t += two_pi;
    if (t >= two_pi)
        t = 0.0;
    return t;
}

HPoint klein_to_hyperboloid(const KPoint& p) {
    const double n2 = p.x * p.x + p.y * p.y;
    if (n2 >= 1.0)
        throw std::invalid_argument("Klein point outside the open unit disk");
    const double w = 1.0 / std::sqrt(1.0 - n2);
    const double x = p.x * w;
    const double y = p.y * w;
    // z from x and y directly, so the sheet constraint holds to rounding
    return HPoint{x, y, std::sqrt(1.0 + x * x + y * y)};
}

KPoint hyperboloid_to_klein(const HPoint& p) {
    require_on_sheet(p);
    return KPoint{p.x / p.z, p.y / p.z};
}

HPoint polar_to_hyperboloid(const PolarPoint& p) {
    if (p.r < 0.0)
        throw std::invalid_argument("polar radius must be nonnegative");
    const double sr = std::sinh(p.r);
    return HPoint{sr * std::cos(p.theta), sr * std::sin(p.theta), std::cosh(p.r)};
}

PolarPoint hyperboloid_to_polar(const HPoint& p) {
    require_on_sheet(p);
    const double r = stable_acosh(p.z);
    double theta = 0.0;
    if (p.x != 0.0 || p.y != 0.0)
        theta = normalize_angle(std::atan2(p.y, p.x));
    return PolarPoint{r, theta};
}

}  // namespace hudg
