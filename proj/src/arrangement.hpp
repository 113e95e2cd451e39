#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypgeo.hpp"

namespace hudg {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point2 a) { return std::sqrt(dot(a, a)); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// Oriented line {p : a*x + b*y + c = 0}, positive side where the value is
// positive.  Stored with a^2 + b^2 = 1.
struct OrientedLine {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;

    double eval(Point2 p) const { return a * p.x + b * p.y + c; }
    Point2 normal() const { return {a, b}; }
    Point2 direction() const { return {-b, a}; }
};

OrientedLine make_line(double a, double b, double c);

// Per-line side labels of a point; entries are -1, 0, +1.
using SignVector = std::vector<std::int8_t>;

std::string sign_vector_to_string(const SignVector& sv);
SignVector sign_vector_from_string(const std::string& s);

struct CombinatorialDescription {
    int n = 0;
    std::vector<SignVector> cells;  // sorted lexicographically, distinct

    bool is_simple() const;  // zero-free, distinct, count = 1 + n(n+1)/2
};

// Expected cell count of a simple arrangement of n lines.
std::size_t simple_cell_count(int n);

void canonicalize(CombinatorialDescription& d);

// Oriented chord of the unit disk; the positive side is to the right of
// the travel direction p -> q.
struct Chord {
    Point2 p;
    Point2 q;
};

struct ChordArrangement {
    std::vector<Chord> chords;
};

inline constexpr double zero_band = 1e-9;
inline constexpr double parallel_tolerance = 1e-9;
inline constexpr double vertex_tolerance = 1e-7;  // relative to diameter
inline constexpr double margin_factor = 1.25;

struct Disk {
    Point2 center;
    double radius = 0.0;
};

// Deterministic Welzl construction.
Disk smallest_enclosing_disk(std::vector<Point2> pts);

SignVector sign_vector(const std::vector<OrientedLine>& lines, Point2 p);

bool is_simple(const std::vector<OrientedLine>& lines);

// Intersection point of two non-parallel lines.
Point2 line_intersection(const OrientedLine& l1, const OrientedLine& l2);

struct CellEnumeration {
    CombinatorialDescription description;
    std::vector<Point2> representatives;  // aligned with description.cells
};

// Enumerates the zero-free sign vectors realized by the arrangement's
// cells, with one witness point each.  Throws DegeneracyError if the
// arrangement is not simple or the cell-count law fails.
CellEnumeration enumerate_cells(const std::vector<OrientedLine>& lines);

std::vector<OrientedLine> random_simple_arrangement(int n, std::uint64_t seed);

ChordArrangement euclidean_to_chords(const std::vector<OrientedLine>& lines);
std::vector<OrientedLine> chords_to_euclidean(const ChordArrangement& chords);

}  // namespace hudg
