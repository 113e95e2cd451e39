#include "extract.hpp"

#include <algorithm>

namespace hudg {

BisectorLine bisector(const HPoint& a, const HPoint& b) {
    if (hyp_distance(a, b) <= degeneracy_gap)
        throw DegeneracyError("bisector of nearly coincident points");
    return BisectorLine{a.x - b.x, a.y - b.y, a.z - b.z};
}

int side_of(const BisectorLine& line, const HPoint& p) {
    require_on_sheet(p);
    const double v = line.eval(p);
    if (v < -zero_band)
        return -1;
    if (v > zero_band)
        return 1;
    return 0;
}

OrientedLine bisector_klein_line(const BisectorLine& line) {
    return make_line(-line.wx, -line.wy, line.wz);
}

int gadget_line_count(const LabeledGraph& g) {
    int n_a = 0, n_b = 0, n_c = 0;
    for (const auto& label : g.labels)
        switch (label.role) {
            case Role::a: ++n_a; break;
            case Role::b: ++n_b; break;
            case Role::c: ++n_c; break;
            default:
                throw std::invalid_argument("graph has a plain vertex: not a gadget graph");
        }
    if (n_a != n_b || n_a < 1 ||
        static_cast<std::size_t>(n_c) != simple_cell_count(n_a))
        throw std::invalid_argument("graph does not have the gadget role structure");
    for (int i = 1; i <= n_a; ++i)
        if (g.find(Role::a, i) < 0 || g.find(Role::b, i) < 0)
            throw std::invalid_argument("gadget labels a_i/b_i are not contiguous");
    for (int j = 1; j <= n_c; ++j)
        if (g.find(Role::c, j) < 0)
            throw std::invalid_argument("gadget labels c_j are not contiguous");
    return n_a;
}

CombinatorialDescription extract_description(const LabeledGraph& g,
                                             const std::vector<HPoint>& points) {
    const int n = gadget_line_count(g);
    const int m = static_cast<int>(simple_cell_count(n));

    if (!verify_hudg(g, points).accepted)
        throw std::invalid_argument("realization does not certify the gadget graph");

    std::vector<BisectorLine> lines;
    lines.reserve(n);
    for (int i = 1; i <= n; ++i)
        lines.push_back(bisector(points[g.find(Role::a, i)], points[g.find(Role::b, i)]));

    CombinatorialDescription d;
    d.n = n;
    for (int j = 1; j <= m; ++j) {
        const HPoint& cj = points[g.find(Role::c, j)];
        SignVector sv;
        sv.reserve(n);
        for (const auto& line : lines) {
            const int s = side_of(line, cj);
            if (s == 0)
                throw DegeneracyError("cell point lies on an extracted bisector");
            sv.push_back(static_cast<std::int8_t>(s));
        }
        d.cells.push_back(std::move(sv));
    }
    canonicalize(d);
    return d;
}

}  // namespace hudg
