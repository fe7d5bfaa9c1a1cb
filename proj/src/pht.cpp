#include "starpht/pht.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace starpht {

std::vector<double> DirectionPlan::sample_angles() const {
    std::vector<double> out;
    for (const auto& arc_samples : samples)
        out.insert(out.end(), arc_samples.begin(), arc_samples.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> DirectionPlan::evaluation_angles() const {
    std::vector<double> out = sample_angles();
    for (const CriticalAngle& ca : critical.angles) out.push_back(ca.theta);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double DirectionPlan::min_arc_length() const {
    double m = kTwoPi;
    for (const Arc& a : arcs) m = std::min(m, a.length());
    return m;
}

DirectionPlan plan_directions(const Polygon& p, int refinement) {
    DirectionPlan plan;
    plan.critical = critical_angles(p);
    const std::size_t n = plan.critical.size();
    for (std::size_t i = 0; i < n; ++i) {
        double start = plan.critical.angles[i].theta;
        double end = (i + 1 < n) ? plan.critical.angles[i + 1].theta
                                 : plan.critical.angles[0].theta + kTwoPi;
        plan.arcs.push_back({start, end});
    }
    // midpoint plus `refinement` extra uniform interior samples; the extras
    // sit at odd multiples of 1/(2R+1) so they never collide with 0.5
    std::vector<double> fractions = {0.5};
    for (int j = 0; j < refinement; ++j)
        fractions.push_back((2.0 * j + 1.0) / (2.0 * refinement + 1.0));
    std::sort(fractions.begin(), fractions.end());

    for (const Arc& arc : plan.arcs) {
        std::vector<double> s;
        for (double f : fractions) s.push_back(normalize_angle(arc.start + f * arc.length()));
        plan.samples.push_back(std::move(s));
    }
    return plan;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const int workers = std::min<int>(jobs, static_cast<int>(count));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

PHTSample pht(const Polygon& p, const DirectionPlan& plan, const std::optional<Point>& center,
              int jobs) {
    PHTSample out;
    out.lipschitz_K = p.max_vertex_norm();
    const std::vector<double> angles = plan.sample_angles();
    out.entries.resize(angles.size());

    if (center) {
        if (!kernel_contains(kernel(p), *center, 1e-9 * std::max(1.0, p.max_vertex_norm())))
            throw NotACenter{};
        parallel_for(angles.size(), jobs, [&](std::size_t i) {
            out.entries[i] = {angles[i],
                              boundary_sweep_diagram(p, *center, Direction(angles[i]), false)};
        });
    } else {
        const Triangulation tri = triangulate(p);
        parallel_for(angles.size(), jobs, [&](std::size_t i) {
            out.entries[i] = {angles[i], lower_star_diagram(tri, Direction(angles[i]))};
        });
    }
    return out;
}

DecompositionReport decompose_check(const Polygon& p, const Point& c, const DirectionPlan& plan,
                                    double tol) {
    if (!kernel_contains(kernel(p), c, 1e-9 * std::max(1.0, p.max_vertex_norm())))
        throw CenterNotInKernel{};
    const std::vector<Sector> secs = sectors(p, c, convex_hull(p));

    DecompositionReport report;
    report.verdict = true;
    for (double theta : plan.evaluation_angles()) {
        const Direction v(theta);
        DecompositionRecord rec;
        rec.angle = theta;
        rec.reduced_shape = reduce(boundary_sweep_diagram(p, c, v, false));
        for (const Sector& s : secs) {
            PersistenceDiagram rd = reduce(sector_diagram(s, v));
            rec.sector_union.points.insert(rec.sector_union.points.end(), rd.points.begin(),
                                           rd.points.end());
        }
        rec.gap = bottleneck_no_diagonal(rec.reduced_shape, rec.sector_union);
        report.max_gap = std::max(report.max_gap, rec.gap);
        if (!(rec.gap <= tol)) report.verdict = false;
        report.records.push_back(std::move(rec));
    }
    return report;
}

std::pair<bool, std::optional<SimplicityWitness>> is_simple_dgm0(const Polygon& p,
                                                                 const DirectionPlan& plan,
                                                                 double tol) {
    // stage (i): star-shaped polygons in general position are simple for all v
    if (!kernel(p).empty() && is_general_position(p).first) return {true, std::nullopt};

    // stage (ii): sampled check at samples, critical angles, and just off them
    std::vector<double> angles = plan.evaluation_angles();
    const double delta = plan.min_arc_length() / 4.0;
    for (const CriticalAngle& ca : plan.critical.angles) {
        angles.push_back(normalize_angle(ca.theta - delta));
        angles.push_back(normalize_angle(ca.theta + delta));
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

    const Triangulation tri = triangulate(p);
    for (double theta : angles) {
        const PersistenceDiagram dgm = lower_star_diagram(tri, Direction(theta));
        const auto fin = dgm.finite_points();
        for (std::size_t i = 0; i < fin.size(); ++i) {
            for (std::size_t j = i + 1; j < fin.size(); ++j) {
                if (linf_dist(fin[i], fin[j]) <= tol)
                    return {false, SimplicityWitness{theta, fin[i]}};
            }
        }
    }
    return {true, std::nullopt};
}

Direction sector_trivial_direction(const Sector& s) {
    const Point a = s.hull_a;
    const Point b = s.hull_b;
    const Point c = s.center;
    const Point d = b - a;
    const double len = norm(d);
    const double dist_to_line = std::abs(cross(d, c - a)) / len;
    if (dist_to_line <= 1e-12 * std::max(1.0, len)) {
        // center on the hull edge: outward normal (right of a->b for a CCW hull)
        return Direction(std::atan2(-d.x, d.y));
    }
    const Point foot = a + (dot(c - a, d) / dot(d, d)) * d;
    const Point w = foot - c;
    return Direction(std::atan2(w.y, w.x));
}

StabilityReport stability_audit(const PHTSample& s, double tol) {
    StabilityReport rep;
    const std::size_t n = s.entries.size();
    if (n < 2) return rep;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [ta, da] = s.entries[i];
        const auto& [tb, db] = s.entries[(i + 1) % n];
        const double dtheta = (i + 1 < n) ? tb - ta : tb + kTwoPi - ta;
        const double vdist = 2.0 * std::abs(std::sin(0.5 * dtheta));
        const double gap = bottleneck(da, db).first;
        if (gap > s.lipschitz_K * vdist + tol) rep.ok = false;
        const double ratio = (s.lipschitz_K * vdist > 0.0) ? gap / (s.lipschitz_K * vdist) : 0.0;
        if (ratio > rep.worst_ratio) {
            rep.worst_ratio = ratio;
            rep.worst_gap = gap;
            rep.angle_a = ta;
            rep.angle_b = tb;
        }
    }
    return rep;
}

}  // namespace starpht
