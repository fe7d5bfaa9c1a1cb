#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starpht {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, const Point& p) { return {s * p.x, s * p.y}; }
inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& p) { return std::hypot(p.x, p.y); }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }

// Maps any angle into [0, 2pi).
double normalize_angle(double theta);

// A point on S^1 stored as its angle; the unit vector is derived.
struct Direction {
    double theta = 0.0;

    Direction() = default;
    explicit Direction(double t) : theta(normalize_angle(t)) {}
    Point vec() const { return {std::cos(theta), std::sin(theta)}; }
};

// <v, x>
inline double height(const Point& x, const Direction& v) {
    return x.x * std::cos(v.theta) + x.y * std::sin(v.theta);
}

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooFewVertices : GeometryError {
    TooFewVertices() : GeometryError("polygon needs at least 3 vertices") {}
};
struct SelfIntersecting : GeometryError {
    SelfIntersecting() : GeometryError("polygon boundary self-intersects") {}
};
struct DegenerateArea : GeometryError {
    DegenerateArea() : GeometryError("polygon area is degenerate") {}
};
struct EmptyKernel : GeometryError {
    EmptyKernel() : GeometryError("kernel is empty; polygon is not star-shaped") {}
};
struct CenterNotInKernel : GeometryError {
    CenterNotInKernel() : GeometryError("supplied center is not in the kernel") {}
};

// Simple closed polygon, counter-clockwise vertex cycle.
struct Polygon {
    std::vector<Point> vertices;

    std::size_t size() const { return vertices.size(); }
    double area() const;          // positive for CCW
    double max_vertex_norm() const;
};

// Validates, fixes orientation, collapses duplicate/collinear consecutive vertices.
// Throws TooFewVertices, DegenerateArea, SelfIntersecting.
Polygon validate_polygon(const std::vector<Point>& raw, double tol = 1e-12);

// Convex hull vertices in CCW order; collinear hull points dropped.
// polygon_index[i] is the index of hull vertex i in the source polygon.
struct Hull {
    std::vector<Point> vertices;
    std::vector<int> polygon_index;

    std::size_t size() const { return vertices.size(); }
};

Hull convex_hull(const Polygon& p);

// Intersection of the interior half-planes of all polygon edges.
// Convex, possibly empty or degenerate (segment or point).
struct KernelPolygon {
    std::vector<Point> vertices;

    bool empty() const { return vertices.empty(); }
    double area() const;
};

KernelPolygon kernel(const Polygon& p);

bool kernel_contains(const KernelPolygon& k, const Point& q, double tol = 1e-9);

// Chebyshev center of the kernel (deepest inscribed circle), lexicographic
// tie-break. Degenerate kernels yield the midpoint of their extreme points.
Point choose_center(const KernelPolygon& k);

// Sub-polygon of M cut by one hull edge and the center: the boundary cycle
// c -> x_i -> (boundary arc of M) -> x_{i+1} -> c.
struct Sector {
    int index = 0;
    Point hull_a, hull_b;             // the hull edge sigma_i
    Point center;
    std::vector<Point> region;        // cycle starting at c
    std::vector<int> vertex_ids;      // polygon vertex id per region vertex, -1 for c
    bool zero_area = false;
};

// One sector per hull edge, CCW. Throws CenterNotInKernel.
std::vector<Sector> sectors(const Polygon& p, const Point& c, const Hull& h);

struct ParallelWitness {
    std::pair<int, int> pair_a;
    std::pair<int, int> pair_b;
};

// True iff no two distinct vertex pairs span parallel, distinct lines.
std::pair<bool, std::optional<ParallelWitness>> is_general_position(const Polygon& p,
                                                                    double tol = 1e-12);

struct CriticalAngle {
    double theta = 0.0;
    std::vector<std::pair<int, int>> witnesses;  // vertex pairs tying at this angle
};

// Angles where two vertex heights tie, sorted, closed under antipody.
struct CriticalAngleSet {
    std::vector<CriticalAngle> angles;

    std::size_t size() const { return angles.size(); }
};

CriticalAngleSet critical_angles(const Polygon& p, double tol = 1e-12);

// true if the segment a-b lies inside the (closed) polygon. Used by tests and
// generator postconditions; samples interior points of the segment.
bool segment_in_polygon(const Polygon& p, const Point& a, const Point& b, int samples = 64);

bool point_in_polygon(const Polygon& p, const Point& q, double tol = 1e-12);

}  // namespace starpht
