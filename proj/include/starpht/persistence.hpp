#pragma once

#include <array>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "starpht/geometry.hpp"

namespace starpht {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct NotACenter : GeometryError {
    NotACenter() : GeometryError("point is not a center of the polygon") {}
};
struct NoEssentialClass : std::runtime_error {
    NoEssentialClass() : std::runtime_error("diagram has no essential class") {}
};
struct TriangulationFailed : std::runtime_error {
    TriangulationFailed() : std::runtime_error("ear clipping failed to find an ear") {}
};

struct DiagramPoint {
    double birth = 0.0;
    double death = kInf;       // +inf for essential classes
    int birth_vertex = -1;     // source vertex id, -1 when unknown
    int death_vertex = -1;
    bool essential = false;

    double persistence() const { return death - birth; }
};

// Finite multiset of birth-death points; the abstract diagonal element is
// implicit and always present.
struct PersistenceDiagram {
    std::vector<DiagramPoint> points;

    std::size_t size() const { return points.size(); }
    std::vector<DiagramPoint> finite_points() const;
    std::vector<DiagramPoint> essential_points() const;
};

// l_inf distance between two diagram points; essential/non-essential pairs
// are infinitely far apart.
double linf_dist(const DiagramPoint& a, const DiagramPoint& b);

// Cost of matching a point to the diagonal: (death - birth) / 2, inf for
// essential points.
double diagonal_gap(const DiagramPoint& a);

// Degree-0 sublevel persistence of the height h_v restricted to a 1-complex:
// vertices swept by (height, index), merges along edges whose endpoints are
// both processed, elder rule with index tie-break. Vertex ids label the points.
PersistenceDiagram sweep_complex(const std::vector<Point>& vertices,
                                 const std::vector<int>& ids,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const Direction& v);

// Star-shape fast path: boundary sweep of the polygon cycle plus the clamp at
// h_v(c): deaths above h_v(c) are clamped there, births at or above h_v(c)
// are discarded. Throws NotACenter when c is outside the kernel.
// check_center=false skips the kernel membership test (for callers that
// already validated c once across many directions).
PersistenceDiagram boundary_sweep_diagram(const Polygon& p, const Point& c, const Direction& v,
                                          bool check_center = true);

// Same sweep and clamp applied to a sector's region cycle (c is a vertex of
// the region). Valid for zero-area sectors too: the cycle is exactly the
// 1-complex of the sector's segments.
PersistenceDiagram sector_diagram(const Sector& s, const Direction& v);

struct Triangulation {
    std::vector<Point> vertices;                 // polygon vertices, same ids
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::pair<int, int>> edges;      // deduplicated, i < j
};

// Ear clipping, lowest eligible vertex index first; k-2 triangles.
Triangulation triangulate(const Polygon& p);

// Degree-0 sublevel persistence of the PL height on the filled polygon.
// Independent of the boundary-sweep route; serves as its oracle.
PersistenceDiagram lower_star_diagram(const Triangulation& t, const Direction& v);

// Removes the essential point with minimal (birth, birth_vertex).
// Throws NoEssentialClass. `removed`, when non-null, receives the point.
PersistenceDiagram reduce(const PersistenceDiagram& d, DiagramPoint* removed = nullptr);

PersistenceDiagram unreduce(const PersistenceDiagram& d, const DiagramPoint& essential);

// One pair of an optimal bottleneck matching; nullopt stands for the diagonal.
struct Matching {
    std::vector<std::pair<std::optional<DiagramPoint>, std::optional<DiagramPoint>>> pairs;
    double cost = 0.0;
};

// Exact bottleneck distance and a realizing matching, by binary search over
// candidate costs with bipartite feasibility checks.
std::pair<double, Matching> bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

// Bottleneck with the diagonal option disabled; +inf when cardinalities differ.
double bottleneck_no_diagonal(const PersistenceDiagram& a, const PersistenceDiagram& b);

bool multiset_equal(const PersistenceDiagram& a, const PersistenceDiagram& b, double tol);

}  // namespace starpht
