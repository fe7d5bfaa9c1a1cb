#pragma once

#include <optional>

#include "starpht/geometry.hpp"
#include "starpht/persistence.hpp"

namespace starpht {

// Open interval of S^1 between two consecutive critical angles. `end` may
// exceed 2pi on the wraparound arc; end > start always.
struct Arc {
    double start = 0.0;
    double end = 0.0;

    double length() const { return end - start; }
    double midpoint() const { return normalize_angle(0.5 * (start + end)); }
};

// Event-based sampling of S^1: arcs bounded by the critical angles, one
// midpoint per arc plus `refinement` extra uniform samples.
struct DirectionPlan {
    CriticalAngleSet critical;
    std::vector<Arc> arcs;
    std::vector<std::vector<double>> samples;  // per arc, normalized angles

    std::vector<double> sample_angles() const;      // all samples, sorted
    std::vector<double> evaluation_angles() const;  // critical + samples, sorted
    double min_arc_length() const;
};

DirectionPlan plan_directions(const Polygon& p, int refinement);

// The sampled PHT: angle -> diagram, sorted by angle.
struct PHTSample {
    std::vector<std::pair<double, PersistenceDiagram>> entries;
    double lipschitz_K = 0.0;
};

// Diagram per sample angle: boundary sweep when a center is supplied,
// lower-star on a triangulation otherwise. jobs > 1 fans angles out to threads.
PHTSample pht(const Polygon& p, const DirectionPlan& plan,
              const std::optional<Point>& center = std::nullopt, int jobs = 1);

struct DecompositionRecord {
    double angle = 0.0;
    PersistenceDiagram reduced_shape;
    PersistenceDiagram sector_union;
    double gap = 0.0;
};

// Executable form of the sector-decomposition identity: at every evaluated
// angle the reduced diagram of M equals the multiset union of the reduced
// sector diagrams.
struct DecompositionReport {
    std::vector<DecompositionRecord> records;
    bool verdict = false;
    double max_gap = 0.0;
};

DecompositionReport decompose_check(const Polygon& p, const Point& c, const DirectionPlan& plan,
                                    double tol = 1e-9);

struct SimplicityWitness {
    double angle = 0.0;
    DiagramPoint point;
};

// Simplicity of the diagram bundle: general-position star-shaped polygons
// pass combinatorially; everything else is checked at samples, critical
// angles, and just off the critical angles.
std::pair<bool, std::optional<SimplicityWitness>> is_simple_dgm0(const Polygon& p,
                                                                 const DirectionPlan& plan,
                                                                 double tol = 1e-9);

// The direction from the center toward the foot of the perpendicular onto the
// hull edge's line; the sector's reduced diagram is empty there. When the
// center lies on the hull edge, the edge's outward normal.
Direction sector_trivial_direction(const Sector& s);

struct StabilityReport {
    bool ok = true;
    double worst_ratio = 0.0;   // gap / (K * |v1 - v2|)
    double worst_gap = 0.0;
    double angle_a = 0.0;
    double angle_b = 0.0;
};

// Checks the Lipschitz bound d_B <= K * |v1 - v2| + tol on adjacent samples.
StabilityReport stability_audit(const PHTSample& s, double tol = 1e-9);

}  // namespace starpht
