#pragma once

#include "arrangement.hpp"
#include "graph.hpp"
#include "witness.hpp"

namespace hudg {

inline constexpr double degeneracy_gap = 1e-7;

// Hyperbolic line {p on the sheet : B(p, w) = 0}, stored by its
// Minkowski-orthogonal vector w = a - b.
struct BisectorLine {
    double wx = 0.0;
    double wy = 0.0;
    double wz = 0.0;

    double eval(const HPoint& p) const { return p.z * wz - p.x * wx - p.y * wy; }
};

// Perpendicular bisector of a and b: d(p,a) = d(p,b) iff B(p, a-b) = 0.
BisectorLine bisector(const HPoint& a, const HPoint& b);

// - when p is closer to a, + when closer to b, 0 within zero_band.
int side_of(const BisectorLine& line, const HPoint& p);

// Supporting Euclidean line of the bisector's chord in the Klein disk
// (for rendering): w_z - w_x*x - w_y*y = 0.
OrientedLine bisector_klein_line(const BisectorLine& line);

// Recover the combinatorial description from an accepted hyperbolic
// realization of a gadget graph: bisector i from (a_i, b_i), sign of each
// cell point c_j against it.
CombinatorialDescription extract_description(const LabeledGraph& g,
                                             const std::vector<HPoint>& points);

// Gadget role structure check: labels are exactly a_1..a_n, b_1..b_n,
// c_1..c_m with m = 1 + n(n+1)/2; returns n.
int gadget_line_count(const LabeledGraph& g);

}  // namespace hudg
