#include "arrangement.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numbers>
#include <random>

namespace hudg {

OrientedLine make_line(double a, double b, double c) {
    const double n = std::hypot(a, b);
    if (n == 0.0)
        throw std::invalid_argument("line normal must be nonzero");
    return OrientedLine{a / n, b / n, c / n};
}

std::string sign_vector_to_string(const SignVector& sv) {
    std::string s;
    s.reserve(sv.size());
    for (auto v : sv)
        s.push_back(v < 0 ? '-' : (v > 0 ? '+' : '0'));
    return s;
}

SignVector sign_vector_from_string(const std::string& s) {
    SignVector sv;
    sv.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '-': sv.push_back(-1); break;
            case '0': sv.push_back(0); break;
            case '+': sv.push_back(1); break;
            default: throw std::invalid_argument("sign vector characters must be one of -0+");
        }
    }
    return sv;
}

std::size_t simple_cell_count(int n) {
    return 1 + static_cast<std::size_t>(n) * (n + 1) / 2;
}

bool CombinatorialDescription::is_simple() const {
    if (n < 1 || cells.size() != simple_cell_count(n))
        return false;
    for (const auto& cell : cells) {
        if (cell.size() != static_cast<std::size_t>(n))
            return false;
        for (auto v : cell)
            if (v == 0)
                return false;
    }
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i - 1] == cells[i])
            return false;
    return true;
}

void canonicalize(CombinatorialDescription& d) {
    std::sort(d.cells.begin(), d.cells.end());
    d.cells.erase(std::unique(d.cells.begin(), d.cells.end()), d.cells.end());
}

SignVector sign_vector(const std::vector<OrientedLine>& lines, Point2 p) {
    if (lines.empty())
        throw std::invalid_argument("sign_vector needs at least one line");
    SignVector sv;
    sv.reserve(lines.size());
    for (const auto& l : lines) {
        const double v = l.eval(p);
        sv.push_back(std::fabs(v) <= zero_band ? std::int8_t{0} : (v < 0 ? std::int8_t{-1} : std::int8_t{1}));
    }
    return sv;
}

Point2 line_intersection(const OrientedLine& l1, const OrientedLine& l2) {
    const double det = l1.a * l2.b - l2.a * l1.b;
    if (std::fabs(det) <= parallel_tolerance)
        throw DegeneracyError("lines are parallel");
    return Point2{(l2.c * l1.b - l1.c * l2.b) / det,
                  (l2.a * l1.c - l1.a * l2.c) / det};
}

namespace {

std::vector<Point2> all_intersections(const std::vector<OrientedLine>& lines) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            pts.push_back(line_intersection(lines[i], lines[j]));
    return pts;
}

double min_pairwise_gap(const std::vector<Point2>& pts) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            gap = std::min(gap, dist(pts[i], pts[j]));
    return gap;
}

double diameter(const std::vector<Point2>& pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, dist(pts[i], pts[j]));
    return d;
}

Point2 centroid(const std::vector<Point2>& pts) {
    Point2 c{0.0, 0.0};
    if (pts.empty())
        return c;
    for (auto p : pts)
        c = c + p;
    return (1.0 / static_cast<double>(pts.size())) * c;
}

Point2 normalized(Point2 v) {
    const double n = norm(v);
    return n > 0.0 ? (1.0 / n) * v : Point2{0.0, 0.0};
}

}  // namespace

bool is_simple(const std::vector<OrientedLine>& lines) {
    const std::size_t n = lines.size();
    if (n < 2)
        return true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double cross = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (std::fabs(cross) <= parallel_tolerance)
                return false;
        }
    const auto pts = all_intersections(lines);
    if (pts.size() < 2)
        return true;
    const double scale = std::max(diameter(pts), 1.0);
    return min_pairwise_gap(pts) > vertex_tolerance * scale;
}

CellEnumeration enumerate_cells(const std::vector<OrientedLine>& lines) {
    const int n = static_cast<int>(lines.size());
    if (n < 1)
        throw std::invalid_argument("enumerate_cells needs at least one line");
    if (!is_simple(lines))
        throw DegeneracyError("arrangement is not simple");

    std::vector<Point2> vertices;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vertices.push_back(line_intersection(lines[i], lines[j]));

    const Point2 center = centroid(vertices);
    double enclosing = 1.0;
    for (auto v : vertices)
        enclosing = std::max(enclosing, dist(v, center));
    double eps = enclosing / 4.0;
    if (vertices.size() >= 2)
        eps = min_pairwise_gap(vertices) / 4.0;

    std::vector<Point2> candidates;
    static const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    std::size_t vi = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Point2 v = vertices[vi++];
            // Sector bisector directions of the two crossing lines catch
            // even very thin wedge cells; the fixed diagonals handle the
            // axis-aligned cases cheaply.
            const Point2 u1 = lines[i].direction();
            const Point2 u2 = lines[j].direction();
            const Point2 d1 = normalized(u1 + u2);
            const Point2 d2 = normalized(u1 - u2);
            for (Point2 d : {d1, d2, Point2{inv_sqrt2, inv_sqrt2}, Point2{inv_sqrt2, -inv_sqrt2}}) {
                candidates.push_back(v + eps * d);
                candidates.push_back(v - eps * d);
            }
        }
    const double ring = 2.0 * enclosing;
    for (int k = 0; k < 4 * n; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / (4.0 * n);
        candidates.push_back(center + ring * Point2{std::cos(phi), std::sin(phi)});
    }
    for (const auto& l : lines) {
        // Perpendicular foot from the ring center, nudged to both sides;
        // this is what witnesses the two half-planes when n = 1.
        const Point2 foot = center - l.eval(center) * l.normal();
        candidates.push_back(foot + eps * l.normal());
        candidates.push_back(foot - eps * l.normal());
    }

    std::map<SignVector, Point2> cells;
    for (auto p : candidates) {
        SignVector sv = sign_vector(lines, p);
        if (std::any_of(sv.begin(), sv.end(), [](std::int8_t s) { return s == 0; }))
            continue;
        cells.emplace(std::move(sv), p);
    }

    if (cells.size() != simple_cell_count(n))
        throw DegeneracyError("cell enumeration found " + std::to_string(cells.size()) +
                              " cells, expected " + std::to_string(simple_cell_count(n)));

    CellEnumeration out;
    out.description.n = n;
    for (const auto& [sv, rep] : cells) {
        out.description.cells.push_back(sv);
        out.representatives.push_back(rep);
    }
    return out;
}

std::vector<OrientedLine> random_simple_arrangement(int n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("arrangement needs at least one line");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> offset(-1.5, 1.5);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);

    std::vector<double> phis(n), offs(n);
    constexpr int max_retries = 100;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        if (attempt == 0) {
            for (int i = 0; i < n; ++i) {
                phis[i] = angle(rng);
                offs[i] = offset(rng);
            }
        } else {
            for (int i = 0; i < n; ++i) {
                phis[i] += jitter(rng) * attempt;
                offs[i] += jitter(rng) * attempt;
            }
        }
        std::vector<OrientedLine> lines;
        lines.reserve(n);
        for (int i = 0; i < n; ++i)
            lines.push_back(make_line(std::cos(phis[i]), std::sin(phis[i]), offs[i]));
        if (!is_simple(lines))
            continue;
        try {
            enumerate_cells(lines);
        } catch (const DegeneracyError&) {
            continue;
        }
        return lines;
    }
    throw DegeneracyError("no simple arrangement found after retries");
}

namespace {

bool disk_contains(const Disk& d, Point2 p) {
    return dist(d.center, p) <= d.radius * (1.0 + 1e-12) + 1e-12;
}

Disk disk_from_two(Point2 a, Point2 b) {
    return Disk{0.5 * (a + b), 0.5 * dist(a, b)};
}

Disk disk_from_three(Point2 a, Point2 b, Point2 c) {
    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    if (std::fabs(d) < 1e-300) {
        Disk best = disk_from_two(a, b);
        for (const Disk& alt : {disk_from_two(a, c), disk_from_two(b, c)})
            if (alt.radius > best.radius)
                best = alt;
        return best;
    }
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const Point2 center{a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
    return Disk{center, dist(center, a)};
}

Disk disk_from_boundary(const std::vector<Point2>& boundary) {
    switch (boundary.size()) {
        case 0: return Disk{{0.0, 0.0}, 0.0};
        case 1: return Disk{boundary[0], 0.0};
        case 2: return disk_from_two(boundary[0], boundary[1]);
        default: return disk_from_three(boundary[0], boundary[1], boundary[2]);
    }
}

Disk welzl(std::vector<Point2>& pts, std::size_t limit, std::vector<Point2>& boundary) {
    if (limit == 0 || boundary.size() == 3)
        return disk_from_boundary(boundary);
    Disk d = welzl(pts, limit - 1, boundary);
    const Point2 p = pts[limit - 1];
    if (disk_contains(d, p))
        return d;
    boundary.push_back(p);
    d = welzl(pts, limit - 1, boundary);
    boundary.pop_back();
    return d;
}

}  // namespace

Disk smallest_enclosing_disk(std::vector<Point2> pts) {
    // Fixed-seed shuffle keeps Welzl's expected-linear behavior while
    // staying deterministic.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<Point2> boundary;
    return welzl(pts, pts.size(), boundary);
}

ChordArrangement euclidean_to_chords(const std::vector<OrientedLine>& lines) {
    if (lines.empty())
        throw std::invalid_argument("euclidean_to_chords needs at least one line");
    if (!is_simple(lines))
        throw DegeneracyError("arrangement is not simple");

    Disk disk{{0.0, 0.0}, 1.0};  // default when there are no intersections
    if (lines.size() >= 2) {
        const auto pts = all_intersections(lines);
        const Disk sed = smallest_enclosing_disk(pts);
        disk.center = sed.center;
        disk.radius = std::max(sed.radius, 1.0);
    }
    // Every line must properly cross the disk to leave a chord.
    double reach = 0.0;
    for (const auto& l : lines)
        reach = std::max(reach, std::fabs(l.eval(disk.center)));
    disk.radius = margin_factor * std::max(disk.radius, reach);

    ChordArrangement out;
    out.chords.reserve(lines.size());
    for (const auto& l : lines) {
        // In disk coordinates p' = (p - center)/radius the line keeps its
        // normal and gets offset c' with |c'| < 1.
        const double c = l.eval(disk.center) / disk.radius;
        const double half = std::sqrt(1.0 - c * c);
        const Point2 foot = -c * l.normal();
        const Point2 t = l.direction();
        out.chords.push_back(Chord{foot - half * t, foot + half * t});
    }
    return out;
}

std::vector<OrientedLine> chords_to_euclidean(const ChordArrangement& arr) {
    std::vector<OrientedLine> lines;
    lines.reserve(arr.chords.size());
    for (const auto& ch : arr.chords) {
        for (Point2 e : {ch.p, ch.q})
            if (std::fabs(norm(e) - 1.0) > 1e-9)
                throw std::invalid_argument("chord endpoint is not on the unit circle");
        const Point2 t = normalized(ch.q - ch.p);
        if (t.x == 0.0 && t.y == 0.0)
            throw std::invalid_argument("chord endpoints coincide");
        // Positive side to the right of p -> q.
        lines.push_back(make_line(t.y, -t.x, -(t.y * ch.p.x - t.x * ch.p.y)));
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double cross = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (std::fabs(cross) <= parallel_tolerance)
                throw DegeneracyError("supporting lines are parallel: chords do not cross");
            const Point2 x = line_intersection(lines[i], lines[j]);
            if (dot(x, x) >= 1.0)
                throw DegeneracyError("supporting lines cross outside the unit disk");
        }
    return lines;
}

}  // namespace hudg
