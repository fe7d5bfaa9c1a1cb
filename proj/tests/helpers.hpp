#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "starpht/persistence.hpp"

namespace starpht::testing {

inline Polygon arrowhead() {
    return validate_polygon({{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}});
}

// top bar with two identical hanging teeth and one lower foot; at v = (0,1)
// the foot is the essential class and both teeth give the point (1, 3), so
// the diagram bundle is not simple
inline Polygon comb() {
    return validate_polygon({{0, 0}, {1, 0}, {1, 3}, {2, 3}, {2, 1}, {3, 1}, {3, 3}, {4, 3},
                             {4, 1}, {5, 1}, {5, 3}, {7, 3}, {7, 4}, {0, 4}});
}

// perturbed 5-armed star: star-shaped and in general position
inline Polygon five_star() {
    std::vector<Point> pts;
    for (int i = 0; i < 10; ++i) {
        const double a = kTwoPi * i / 10 + 0.017 * std::sin(3.7 * i + 0.5);
        const double r = (i % 2 == 0) ? 2.0 + 0.01 * i : 0.7 + 0.005 * i;
        pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return validate_polygon(pts);
}

// number of connected components of the subcomplex induced by vertices with
// height <= t, by breadth-first search; oracle for diagram point counts
inline int components_at(const Triangulation& tri, const Direction& v, double t) {
    const std::size_t n = tri.vertices.size();
    std::vector<int> in(n, 0);
    for (std::size_t i = 0; i < n; ++i) in[i] = height(tri.vertices[i], v) <= t;
    std::vector<int> seen(n, 0);
    int comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (!in[s] || seen[s]) continue;
        ++comps;
        std::vector<std::size_t> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (const auto& [a, b] : tri.edges) {
                const std::size_t ua = static_cast<std::size_t>(a);
                const std::size_t ub = static_cast<std::size_t>(b);
                if (ua == u && in[ub] && !seen[ub]) seen[ub] = 1, stack.push_back(ub);
                if (ub == u && in[ua] && !seen[ua]) seen[ua] = 1, stack.push_back(ua);
            }
        }
    }
    return comps;
}

inline int diagram_components_at(const PersistenceDiagram& d, double t) {
    int count = 0;
    for (const DiagramPoint& pt : d.points)
        if (pt.birth <= t && t < pt.death) ++count;
    return count;
}

// brute-force bottleneck over all matchings with diagonal padding; for tiny
// diagrams only
inline double bottleneck_oracle(const PersistenceDiagram& da, const PersistenceDiagram& db) {
    const auto ea = da.essential_points();
    const auto eb = db.essential_points();
    if (ea.size() != eb.size()) return kInf;
    double ess = 0.0;
    auto sa = ea, sb = eb;
    auto by_birth = [](const DiagramPoint& x, const DiagramPoint& y) { return x.birth < y.birth; };
    std::sort(sa.begin(), sa.end(), by_birth);
    std::sort(sb.begin(), sb.end(), by_birth);
    for (std::size_t i = 0; i < sa.size(); ++i)
        ess = std::max(ess, std::abs(sa[i].birth - sb[i].birth));

    const auto fa = da.finite_points();
    const auto fb = db.finite_points();
    const std::size_t n = fa.size(), m = fb.size();
    // pad both sides with diagonals: permutation over n+m slots
    std::vector<int> perm(n + m);
    std::iota(perm.begin(), perm.end(), 0);
    double best = kInf;
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < n + m; ++i) {
            const bool left_real = i < n;
            const std::size_t j = static_cast<std::size_t>(perm[i]);
            const bool right_real = j < m;
            if (left_real && right_real)
                cost = std::max(cost, linf_dist(fa[i], fb[j]));
            else if (left_real)
                cost = std::max(cost, diagonal_gap(fa[i]));
            else if (right_real)
                cost = std::max(cost, diagonal_gap(fb[j]));
        }
        best = std::min(best, cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::max(best, ess);
}

inline PersistenceDiagram random_diagram(std::mt19937_64& g, int max_finite, int essentials) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_int_distribution<int> c(0, max_finite);
    PersistenceDiagram d;
    const int n = c(g);
    for (int i = 0; i < n; ++i) {
        DiagramPoint pt;
        pt.birth = u(g);
        pt.death = pt.birth + std::abs(u(g)) + 1e-3;
        d.points.push_back(pt);
    }
    for (int i = 0; i < essentials; ++i) {
        DiagramPoint pt;
        pt.birth = u(g);
        pt.death = kInf;
        pt.essential = true;
        d.points.push_back(pt);
    }
    return d;
}

}  // namespace starpht::testing
