#pragma once

#include <cmath>
#include <stdexcept>

namespace hudg {

// Absolute tolerance on |Q(p) - 1| for points claimed to lie on the
// forward hyperboloid sheet.
inline constexpr double on_sheet_tolerance = 1e-9;

struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point on the forward sheet z > 0 of z^2 - x^2 - y^2 = 1.
struct HPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;
};

// Point in the open unit disk of the Beltrami-Klein model.
struct KPoint {
    double x = 0.0;
    double y = 0.0;
};

// Native polar coordinates: hyperbolic distance r from the origin,
// angle theta normalized to [0, 2*pi).
struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
};

double minkowski_q(const HPoint& p);
bool on_sheet(const HPoint& p, double tol = on_sheet_tolerance);
void require_on_sheet(const HPoint& p, double tol = on_sheet_tolerance);

// Minkowski bilinear form u_z*v_z - u_x*v_x - u_y*v_y.
double minkowski_b(const HPoint& u, const HPoint& v);

// The same form for two on-sheet points, evaluated through coordinate
// differences: exactly 1 for identical points and full precision near 1,
// where the direct product form cancels catastrophically.
double sheet_b(const HPoint& u, const HPoint& v);

// arccosh of the bilinear form; >= 0, symmetric.  Values of B slightly
// below 1 (within on_sheet_tolerance) are clamped; anything lower throws.
double hyp_distance(const HPoint& u, const HPoint& v);

// Stable arccosh for x >= 1: ln1p((x-1) + sqrt((x-1)(x+1))).
double stable_acosh(double x);

double normalize_angle(double theta);

HPoint klein_to_hyperboloid(const KPoint& p);
KPoint hyperboloid_to_klein(const HPoint& p);
HPoint polar_to_hyperboloid(const PolarPoint& p);
PolarPoint hyperboloid_to_polar(const HPoint& p);

}  // namespace hudg
