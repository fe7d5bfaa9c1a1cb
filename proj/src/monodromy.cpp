#include "starpht/monodromy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace starpht {

namespace {

using Label = std::pair<int, int>;  // (birth_vertex, death_vertex)

double wrap_into(double theta, double start, double end) {
    // represent theta within [start, end] allowing the arc to cross 2pi
    double t = theta;
    while (t < start) t += kTwoPi;
    while (t > end + 1e-15 && t - kTwoPi >= start - 1e-15) t -= kTwoPi;
    return t;
}

}  // namespace

std::pair<double, double> eval_segment(const SectionSegment& seg, const Polygon& p, double theta) {
    const Direction v(theta);
    const double b = height(p.vertices[static_cast<std::size_t>(seg.birth_vertex)], v);
    if (seg.essential) return {b, kInf};
    return {b, height(p.vertices[static_cast<std::size_t>(seg.death_vertex)], v)};
}

std::optional<std::pair<double, double>> Section::eval(const Polygon& p, double theta) const {
    for (const SectionSegment& seg : segments) {
        double t = wrap_into(theta, seg.theta_start, seg.theta_end);
        if (t >= seg.theta_start - 1e-15 && t <= seg.theta_end + 1e-15)
            return eval_segment(seg, p, t);
    }
    return std::nullopt;
}

std::vector<std::pair<double, PersistenceDiagram>> total_space(const Polygon& p,
                                                               const DirectionPlan& plan) {
    auto [simple, witness] = is_simple_dgm0(p, plan);
    if (!simple) throw NotSimple(*witness);
    const Triangulation tri = triangulate(p);
    std::vector<std::pair<double, PersistenceDiagram>> out;
    for (double theta : plan.evaluation_angles())
        out.emplace_back(theta, reduce(lower_star_diagram(tri, Direction(theta))));
    return out;
}

StitchPairing stitch(const PersistenceDiagram& left, const PersistenceDiagram& right, double K,
                     double delta) {
    StitchPairing sp;
    const auto fl = left.finite_points();
    const auto fr = right.finite_points();
    const double radius = 2.0 * K * delta;

    // precondition: the stitch radius resolves every point unambiguously
    double min_gap = kInf;
    for (std::size_t i = 0; i < fl.size(); ++i)
        for (std::size_t j = i + 1; j < fl.size(); ++j)
            min_gap = std::min(min_gap, linf_dist(fl[i], fl[j]));
    for (std::size_t i = 0; i < fr.size(); ++i)
        for (std::size_t j = i + 1; j < fr.size(); ++j)
            min_gap = std::min(min_gap, linf_dist(fr[i], fr[j]));
    if (radius >= 0.5 * min_gap) {
        sp.needs_smaller_delta = true;
        return sp;
    }

    std::vector<int> right_taken(fr.size(), -1);
    for (std::size_t i = 0; i < fl.size(); ++i) {
        int candidate = -1;
        for (std::size_t j = 0; j < fr.size(); ++j) {
            if (linf_dist(fl[i], fr[j]) > radius) continue;
            if (candidate >= 0 || right_taken[j] >= 0) {
                sp.needs_smaller_delta = true;
                return sp;
            }
            candidate = static_cast<int>(j);
        }
        if (candidate >= 0) {
            right_taken[static_cast<std::size_t>(candidate)] = static_cast<int>(i);
            sp.pairs.emplace_back(static_cast<int>(i), candidate);
        } else {
            sp.ended.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t j = 0; j < fr.size(); ++j)
        if (right_taken[j] < 0) sp.started.push_back(static_cast<int>(j));
    return sp;
}

SectionBundle build_sections(const Polygon& p, const DirectionPlan& plan) {
    auto [simple, witness] = is_simple_dgm0(p, plan);
    if (!simple) throw NotSimple(*witness);

    const Triangulation tri = triangulate(p);
    const double K = p.max_vertex_norm();
    const std::size_t A = plan.arcs.size();

    // labels are constant on each open arc; read them off at the midpoint
    std::vector<std::vector<Label>> arc_labels(A);
    std::vector<int> arc_essential(A, -1);
    for (std::size_t a = 0; a < A; ++a) {
        DiagramPoint ess;
        PersistenceDiagram red =
            reduce(lower_star_diagram(tri, Direction(plan.arcs[a].midpoint())), &ess);
        arc_essential[a] = ess.birth_vertex;
        for (const DiagramPoint& pt : red.points)
            arc_labels[a].emplace_back(pt.birth_vertex, pt.death_vertex);
    }

    auto labels_to_diagram = [&](const std::vector<Label>& labels, double theta) {
        PersistenceDiagram d;
        const Direction v(theta);
        for (const Label& l : labels) {
            DiagramPoint pt;
            pt.birth = height(p.vertices[static_cast<std::size_t>(l.first)], v);
            pt.death = height(p.vertices[static_cast<std::size_t>(l.second)], v);
            pt.birth_vertex = l.first;
            pt.death_vertex = l.second;
            if (pt.death > pt.birth) d.points.push_back(pt);
            // points at or past the diagonal at theta have already terminated
        }
        return d;
    };

    // stitch across every critical angle; the adaptive delta realizes the
    // continuity-based lift
    std::vector<std::map<Label, Label>> continues(A);  // boundary b: arc b -> arc b+1
    for (std::size_t b = 0; b < A; ++b) {
        const std::size_t bn = (b + 1) % A;
        const double theta_c = plan.arcs[bn].start;
        double delta = std::min(plan.arcs[b].length(), plan.arcs[bn].length()) / 4.0;
        bool done = false;
        for (int iter = 0; iter <= 40 && !done; ++iter, delta *= 0.5) {
            PersistenceDiagram left = labels_to_diagram(arc_labels[b], theta_c - delta);
            PersistenceDiagram right = labels_to_diagram(arc_labels[bn], theta_c + delta);
            StitchPairing sp = stitch(left, right, K, delta);
            if (sp.needs_smaller_delta) continue;
            for (auto [li, ri] : sp.pairs) {
                const Label& ll =
                    Label{left.points[static_cast<std::size_t>(li)].birth_vertex,
                          left.points[static_cast<std::size_t>(li)].death_vertex};
                const Label& rl =
                    Label{right.points[static_cast<std::size_t>(ri)].birth_vertex,
                          right.points[static_cast<std::size_t>(ri)].death_vertex};
                continues[b][ll] = rl;
            }
            done = true;
        }
        if (!done) throw AmbiguousStitch{};
    }

    // node = (arc, label position); link nodes along the recorded pairings
    std::vector<std::size_t> offset(A + 1, 0);
    for (std::size_t a = 0; a < A; ++a) offset[a + 1] = offset[a] + arc_labels[a].size();
    const std::size_t N = offset[A];
    auto node_of = [&](std::size_t a, const Label& l) -> int {
        for (std::size_t i = 0; i < arc_labels[a].size(); ++i)
            if (arc_labels[a][i] == l) return static_cast<int>(offset[a] + i);
        return -1;
    };
    std::vector<int> right_of(N, -1), left_of(N, -1);
    for (std::size_t b = 0; b < A; ++b) {
        const std::size_t bn = (b + 1) % A;
        for (const auto& [ll, rl] : continues[b]) {
            int u = node_of(b, ll);
            int v = node_of(bn, rl);
            if (u < 0 || v < 0) continue;
            right_of[static_cast<std::size_t>(u)] = v;
            left_of[static_cast<std::size_t>(v)] = u;
        }
    }
    auto arc_of_node = [&](int nd) {
        std::size_t a = 0;
        while (offset[a + 1] <= static_cast<std::size_t>(nd)) ++a;
        return a;
    };
    auto label_of_node = [&](int nd) {
        std::size_t a = arc_of_node(nd);
        return arc_labels[a][static_cast<std::size_t>(nd) - offset[a]];
    };

    SectionBundle bundle;

    // the essential class: one full-circle section, labels chained per arc
    {
        Section ess;
        ess.essential = true;
        ess.full_circle = true;
        for (std::size_t a = 0; a < A; ++a) {
            SectionSegment seg;
            seg.arc_index = a;
            seg.theta_start = plan.arcs[a].start;
            seg.theta_end = plan.arcs[a].end;
            seg.birth_vertex = arc_essential[a];
            seg.essential = true;
            ess.segments.push_back(seg);
        }
        bundle.sections.push_back(std::move(ess));
    }

    std::vector<bool> visited(N, false);
    for (std::size_t start = 0; start < N; ++start) {
        if (visited[start] || left_of[start] >= 0) continue;
        // open chain beginning here
        Section sec;
        std::vector<int> chain;
        int cur = static_cast<int>(start);
        while (cur >= 0 && !visited[static_cast<std::size_t>(cur)]) {
            visited[static_cast<std::size_t>(cur)] = true;
            chain.push_back(cur);
            const std::size_t a = arc_of_node(cur);
            const Label l = label_of_node(cur);
            SectionSegment seg;
            seg.arc_index = a;
            seg.theta_start = plan.arcs[a].start;
            seg.theta_end = plan.arcs[a].end;
            seg.birth_vertex = l.first;
            seg.death_vertex = l.second;
            sec.segments.push_back(seg);
            cur = right_of[static_cast<std::size_t>(cur)];
        }
        if (chain.size() > A) {
            // the chain winds past a full turn: it revisits arcs, so no family
            // of single-valued continuous sections can cover it
            bundle.has_wraparound = true;
            if (!bundle.witness) {
                const std::size_t a0 = arc_of_node(chain.front());
                const double theta = plan.arcs[a0].midpoint();
                const Direction v(theta);
                const Label l0 = label_of_node(chain.front());
                const Label l1 = label_of_node(chain[A]);
                MonodromyWitness w;
                w.angle = theta;
                w.start = {height(p.vertices[static_cast<std::size_t>(l0.first)], v),
                           height(p.vertices[static_cast<std::size_t>(l0.second)], v)};
                w.end = {height(p.vertices[static_cast<std::size_t>(l1.first)], v),
                         height(p.vertices[static_cast<std::size_t>(l1.second)], v)};
                bundle.witness = w;
            }
            continue;
        }
        sec.support_start = normalize_angle(sec.segments.front().theta_start);
        sec.support_end = normalize_angle(sec.segments.back().theta_end);
        bundle.sections.push_back(std::move(sec));
    }

    // anything left is a closed loop of non-essential points around S^1
    for (std::size_t start = 0; start < N; ++start) {
        if (visited[start]) continue;
        bundle.has_wraparound = true;
        // follow the loop exactly once around the base circle
        int cur = static_cast<int>(start);
        for (std::size_t steps = 0; steps < A; ++steps) {
            visited[static_cast<std::size_t>(cur)] = true;
            cur = right_of[static_cast<std::size_t>(cur)];
        }
        const std::size_t a0 = arc_of_node(static_cast<int>(start));
        const double theta = plan.arcs[a0].midpoint();
        const Direction v(theta);
        const Label l0 = label_of_node(static_cast<int>(start));
        const Label l1 = label_of_node(cur);
        MonodromyWitness w;
        w.angle = theta;
        w.start = {height(p.vertices[static_cast<std::size_t>(l0.first)], v),
                   height(p.vertices[static_cast<std::size_t>(l0.second)], v)};
        w.end = {height(p.vertices[static_cast<std::size_t>(l1.first)], v),
                 height(p.vertices[static_cast<std::size_t>(l1.second)], v)};
        if (!bundle.witness) bundle.witness = w;
        // mark the rest of this component visited
        while (!visited[static_cast<std::size_t>(cur)]) {
            visited[static_cast<std::size_t>(cur)] = true;
            cur = right_of[static_cast<std::size_t>(cur)];
        }
    }
    return bundle;
}

MonodromyVerdict monodromy_decision(const Polygon& p, const SectionBundle& bundle,
                                    const DirectionPlan& plan, double tol) {
    MonodromyVerdict verdict;
    verdict.sections = bundle.sections;
    verdict.witness_loop = bundle.witness;
    verdict.trivial = !bundle.has_wraparound;

    const Triangulation tri = triangulate(p);

    // segments per arc, non-essential sections only
    const std::size_t A = plan.arcs.size();
    std::vector<std::vector<const SectionSegment*>> per_arc(A);
    const Section* essential_section = nullptr;
    for (const Section& sec : bundle.sections) {
        if (sec.essential) {
            essential_section = &sec;
            continue;
        }
        for (const SectionSegment& seg : sec.segments) per_arc[seg.arc_index].push_back(&seg);
    }

    for (std::size_t a = 0; a < A && verdict.trivial; ++a) {
        for (double theta : plan.samples[a]) {
            DiagramPoint ess;
            const PersistenceDiagram red =
                reduce(lower_star_diagram(tri, Direction(theta)), &ess);
            PersistenceDiagram from_sections;
            for (const SectionSegment* seg : per_arc[a]) {
                auto [b, d] = eval_segment(*seg, p, theta);
                if (d > b) {
                    DiagramPoint pt;
                    pt.birth = b;
                    pt.death = d;
                    pt.birth_vertex = seg->birth_vertex;
                    pt.death_vertex = seg->death_vertex;
                    from_sections.points.push_back(pt);
                }
            }
            if (!multiset_equal(red, from_sections, tol)) {
                verdict.trivial = false;
                break;
            }
            if (essential_section) {
                auto val = essential_section->eval(p, theta);
                if (!val || std::abs(val->first - ess.birth) > tol) {
                    verdict.trivial = false;
                    break;
                }
            }
        }
    }
    return verdict;
}

MonodromyVerdict monodromy(const Polygon& p, const DirectionPlan& plan, double tol) {
    return monodromy_decision(p, build_sections(p, plan), plan, tol);
}

std::vector<VineRow> export_vines(const std::vector<Section>& sections, const Polygon& p,
                                  const DirectionPlan& plan) {
    std::vector<VineRow> rows;
    int id = 0;
    for (const Section& sec : sections) {
        for (const SectionSegment& seg : sec.segments) {
            std::vector<double> thetas = {normalize_angle(seg.theta_start)};
            for (double t : plan.samples[seg.arc_index]) thetas.push_back(t);
            thetas.push_back(normalize_angle(seg.theta_end));
            for (double t : thetas) {
                auto [b, d] = eval_segment(seg, p, t);
                VineRow row;
                row.section_id = id;
                row.theta = t;
                row.birth = b;
                row.death = d;
                row.birth_vertex = seg.birth_vertex;
                row.death_vertex = seg.essential ? -1 : seg.death_vertex;
                row.essential = seg.essential;
                rows.push_back(row);
            }
        }
        ++id;
    }
    return rows;
}

}  // namespace starpht
