#pragma once

#include <optional>

#include "starpht/pht.hpp"

namespace starpht {

struct NotSimple : std::runtime_error {
    SimplicityWitness witness;

    explicit NotSimple(SimplicityWitness w)
        : std::runtime_error("diagram bundle is not simple"), witness(w) {}
};

struct AmbiguousStitch : std::runtime_error {
    AmbiguousStitch()
        : std::runtime_error("stitch found two candidates within radius after max refinement") {}
};

// One arc's worth of a section: labels are constant between critical angles,
// so the point is the closed-form sinusoid theta -> (<v, w_b>, <v, w_d>).
struct SectionSegment {
    std::size_t arc_index = 0;
    double theta_start = 0.0;
    double theta_end = 0.0;   // may exceed 2pi on the wraparound arc
    int birth_vertex = -1;
    int death_vertex = -1;
    bool essential = false;
};

std::pair<double, double> eval_segment(const SectionSegment& seg, const Polygon& p, double theta);

// A continuous curve of diagram points over a connected arc of S^1 (a vine).
struct Section {
    std::vector<SectionSegment> segments;  // consecutive arcs in CCW order
    bool essential = false;
    bool full_circle = false;
    double support_start = 0.0;  // critical angles bounding the support
    double support_end = 0.0;

    std::optional<std::pair<double, double>> eval(const Polygon& p, double theta) const;
};

// Per-angle reduced labeled diagrams over the plan, ordered by angle.
// Throws NotSimple when the bundle is not simple.
std::vector<std::pair<double, PersistenceDiagram>> total_space(const Polygon& p,
                                                               const DirectionPlan& plan);

// Pairing of off-diagonal points across a critical angle within radius 2*K*delta.
struct StitchPairing {
    std::vector<std::pair<int, int>> pairs;  // finite-point indices, left -> right
    std::vector<int> ended;                  // left indices terminating onto the diagonal
    std::vector<int> started;                // right indices starting new sections
    bool needs_smaller_delta = false;
};

StitchPairing stitch(const PersistenceDiagram& left, const PersistenceDiagram& right, double K,
                     double delta);

struct MonodromyWitness {
    double angle = 0.0;
    std::pair<double, double> start;  // a point of the fibre over `angle`
    std::pair<double, double> end;    // where it lands after one loop
};

struct SectionBundle {
    std::vector<Section> sections;
    bool has_wraparound = false;  // a non-essential component circling all of S^1
    std::optional<MonodromyWitness> witness;
};

SectionBundle build_sections(const Polygon& p, const DirectionPlan& plan);

struct MonodromyVerdict {
    bool trivial = false;
    std::vector<Section> sections;
    std::optional<MonodromyWitness> witness_loop;
};

// Trivial iff the once-around return map is the identity and the sections
// cover every sampled diagram exactly.
MonodromyVerdict monodromy_decision(const Polygon& p, const SectionBundle& bundle,
                                    const DirectionPlan& plan, double tol = 1e-9);

// Full pipeline: simplicity gate, section extraction, verdict.
MonodromyVerdict monodromy(const Polygon& p, const DirectionPlan& plan, double tol = 1e-9);

struct VineRow {
    int section_id = 0;
    double theta = 0.0;
    double birth = 0.0;
    double death = kInf;
    int birth_vertex = -1;
    int death_vertex = -1;
    bool essential = false;
};

std::vector<VineRow> export_vines(const std::vector<Section>& sections, const Polygon& p,
                                  const DirectionPlan& plan);

}  // namespace starpht
