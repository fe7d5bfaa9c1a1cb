#include "starpht/persistence.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>

namespace starpht {

std::vector<DiagramPoint> PersistenceDiagram::finite_points() const {
    std::vector<DiagramPoint> out;
    for (const DiagramPoint& p : points)
        if (!p.essential) out.push_back(p);
    return out;
}

std::vector<DiagramPoint> PersistenceDiagram::essential_points() const {
    std::vector<DiagramPoint> out;
    for (const DiagramPoint& p : points)
        if (p.essential) out.push_back(p);
    return out;
}

double linf_dist(const DiagramPoint& a, const DiagramPoint& b) {
    if (a.essential != b.essential) return kInf;
    if (a.essential) return std::abs(a.birth - b.birth);
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_gap(const DiagramPoint& a) {
    if (a.essential) return kInf;
    return 0.5 * (a.death - a.birth);
}

PersistenceDiagram sweep_complex(const std::vector<Point>& vertices,
                                 const std::vector<int>& ids,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const Direction& v) {
    const int n = static_cast<int>(vertices.size());
    std::vector<double> h(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] = height(vertices[static_cast<std::size_t>(i)], v);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        if (a == b) continue;
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double ha = h[static_cast<std::size_t>(a)], hb = h[static_cast<std::size_t>(b)];
        if (ha != hb) return ha < hb;
        return ids[static_cast<std::size_t>(a)] < ids[static_cast<std::size_t>(b)];
    });

    // union-find with (birth, birth vertex id) payload on roots
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<double> birth(static_cast<std::size_t>(n), 0.0);
    std::vector<int> birth_vertex(static_cast<std::size_t>(n), -1);
    std::vector<bool> processed(static_cast<std::size_t>(n), false);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    PersistenceDiagram dgm;
    for (int u : order) {
        parent[static_cast<std::size_t>(u)] = u;
        birth[static_cast<std::size_t>(u)] = h[static_cast<std::size_t>(u)];
        birth_vertex[static_cast<std::size_t>(u)] = ids[static_cast<std::size_t>(u)];
        processed[static_cast<std::size_t>(u)] = true;
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (!processed[static_cast<std::size_t>(w)]) continue;
            int ru = find(u);
            int rw = find(w);
            if (ru == rw) continue;
            // elder rule: older birth survives, index breaks ties
            int keep = ru, kill = rw;
            if (birth[static_cast<std::size_t>(rw)] < birth[static_cast<std::size_t>(ru)] ||
                (birth[static_cast<std::size_t>(rw)] == birth[static_cast<std::size_t>(ru)] &&
                 birth_vertex[static_cast<std::size_t>(rw)] < birth_vertex[static_cast<std::size_t>(ru)])) {
                std::swap(keep, kill);
            }
            if (h[static_cast<std::size_t>(u)] > birth[static_cast<std::size_t>(kill)]) {
                DiagramPoint pt;
                pt.birth = birth[static_cast<std::size_t>(kill)];
                pt.death = h[static_cast<std::size_t>(u)];
                pt.birth_vertex = birth_vertex[static_cast<std::size_t>(kill)];
                pt.death_vertex = ids[static_cast<std::size_t>(u)];
                dgm.points.push_back(pt);
            }
            parent[static_cast<std::size_t>(kill)] = keep;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (find(i) == i) {
            DiagramPoint pt;
            pt.birth = birth[static_cast<std::size_t>(i)];
            pt.birth_vertex = birth_vertex[static_cast<std::size_t>(i)];
            pt.death = kInf;
            pt.essential = true;
            dgm.points.push_back(pt);
        }
    }
    std::sort(dgm.points.begin(), dgm.points.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
        if (a.essential != b.essential) return a.essential < b.essential;
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.death != b.death) return a.death < b.death;
        return a.birth_vertex < b.birth_vertex;
    });
    return dgm;
}

namespace {

std::vector<std::pair<int, int>> cycle_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
        return edges;
    }
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return edges;
}

// Star-shape clamp: for t >= h_v(c) the filled shape is connected, so no
// class born there survives and every pending merge happens at h_v(c).
PersistenceDiagram clamp_at_center(PersistenceDiagram dgm, double hc) {
    PersistenceDiagram out;
    for (DiagramPoint& p : dgm.points) {
        if (p.essential) {
            out.points.push_back(p);
            continue;
        }
        if (p.birth >= hc) continue;
        if (p.death > hc) {
            p.death = hc;
            p.death_vertex = -1;
        }
        if (p.death > p.birth) out.points.push_back(p);
    }
    return out;
}

}  // namespace

PersistenceDiagram boundary_sweep_diagram(const Polygon& p, const Point& c, const Direction& v,
                                          bool check_center) {
    if (check_center && !kernel_contains(kernel(p), c, 1e-9 * std::max(1.0, p.max_vertex_norm())))
        throw NotACenter{};
    const int n = static_cast<int>(p.size());
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    PersistenceDiagram dgm = sweep_complex(p.vertices, ids, cycle_edges(n), v);
    return clamp_at_center(std::move(dgm), height(c, v));
}

PersistenceDiagram sector_diagram(const Sector& s, const Direction& v) {
    const int n = static_cast<int>(s.region.size());
    PersistenceDiagram dgm = sweep_complex(s.region, s.vertex_ids, cycle_edges(n), v);
    return clamp_at_center(std::move(dgm), height(s.center, v));
}

Triangulation triangulate(const Polygon& p) {
    const int n = static_cast<int>(p.size());
    Triangulation t;
    t.vertices = p.vertices;

    std::vector<int> active(static_cast<std::size_t>(n));
    std::iota(active.begin(), active.end(), 0);
    const double scale = std::max(1.0, p.max_vertex_norm());
    const double ceps = 1e-12 * scale * scale;

    auto inside_or_on = [&](const Point& a, const Point& b, const Point& c, const Point& q) {
        return cross(b - a, q - a) >= -ceps && cross(c - b, q - b) >= -ceps &&
               cross(a - c, q - c) >= -ceps;
    };

    while (active.size() > 3) {
        bool clipped = false;
        for (std::size_t k = 0; k < active.size(); ++k) {
            int prev = active[(k + active.size() - 1) % active.size()];
            int cur = active[k];
            int next = active[(k + 1) % active.size()];
            const Point& a = p.vertices[static_cast<std::size_t>(prev)];
            const Point& b = p.vertices[static_cast<std::size_t>(cur)];
            const Point& c = p.vertices[static_cast<std::size_t>(next)];
            if (cross(b - a, c - b) <= ceps) continue;  // reflex or flat
            bool ear = true;
            for (int other : active) {
                if (other == prev || other == cur || other == next) continue;
                if (inside_or_on(a, b, c, p.vertices[static_cast<std::size_t>(other)])) {
                    ear = false;
                    break;
                }
            }
            if (!ear) continue;
            t.triangles.push_back({prev, cur, next});
            active.erase(active.begin() + static_cast<long>(k));
            clipped = true;
            break;  // restart scan: lowest eligible position first
        }
        if (!clipped) throw TriangulationFailed{};
    }
    t.triangles.push_back({active[0], active[1], active[2]});

    std::set<std::pair<int, int>> eset;
    for (const auto& tri : t.triangles) {
        for (int e = 0; e < 3; ++e) {
            int a = tri[static_cast<std::size_t>(e)];
            int b = tri[static_cast<std::size_t>((e + 1) % 3)];
            eset.emplace(std::min(a, b), std::max(a, b));
        }
    }
    t.edges.assign(eset.begin(), eset.end());
    return t;
}

PersistenceDiagram lower_star_diagram(const Triangulation& t, const Direction& v) {
    std::vector<int> ids(t.vertices.size());
    std::iota(ids.begin(), ids.end(), 0);
    return sweep_complex(t.vertices, ids, t.edges, v);
}

PersistenceDiagram reduce(const PersistenceDiagram& d, DiagramPoint* removed) {
    int best = -1;
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const DiagramPoint& p = d.points[i];
        if (!p.essential) continue;
        if (best < 0 || p.birth < d.points[static_cast<std::size_t>(best)].birth ||
            (p.birth == d.points[static_cast<std::size_t>(best)].birth &&
             p.birth_vertex < d.points[static_cast<std::size_t>(best)].birth_vertex)) {
            best = static_cast<int>(i);
        }
    }
    if (best < 0) throw NoEssentialClass{};
    if (removed) *removed = d.points[static_cast<std::size_t>(best)];
    PersistenceDiagram out;
    for (std::size_t i = 0; i < d.points.size(); ++i)
        if (static_cast<int>(i) != best) out.points.push_back(d.points[i]);
    return out;
}

PersistenceDiagram unreduce(const PersistenceDiagram& d, const DiagramPoint& essential) {
    PersistenceDiagram out = d;
    out.points.push_back(essential);
    return out;
}

namespace {

// Kuhn's augmenting-path bipartite matching.
struct Bipartite {
    int nl = 0, nr = 0;
    std::vector<std::vector<int>> adj;  // left -> rights

    explicit Bipartite(int l, int r) : nl(l), nr(r), adj(static_cast<std::size_t>(l)) {}
    void add(int l, int r) { adj[static_cast<std::size_t>(l)].push_back(r); }

    // returns match_l (size nl, -1 unmatched) and the matching size
    std::pair<std::vector<int>, int> solve() const {
        std::vector<int> match_r(static_cast<std::size_t>(nr), -1);
        std::vector<int> match_l(static_cast<std::size_t>(nl), -1);
        std::vector<char> used;
        std::function<bool(int)> try_kuhn = [&](int u) -> bool {
            for (int r : adj[static_cast<std::size_t>(u)]) {
                if (used[static_cast<std::size_t>(r)]) continue;
                used[static_cast<std::size_t>(r)] = 1;
                if (match_r[static_cast<std::size_t>(r)] < 0 || try_kuhn(match_r[static_cast<std::size_t>(r)])) {
                    match_r[static_cast<std::size_t>(r)] = u;
                    match_l[static_cast<std::size_t>(u)] = r;
                    return true;
                }
            }
            return false;
        };
        int size = 0;
        for (int u = 0; u < nl; ++u) {
            used.assign(static_cast<std::size_t>(nr), 0);
            if (try_kuhn(u)) ++size;
        }
        return {match_l, size};
    }
};

// Perfect-matching feasibility for cost lambda over the finite points, with
// diagonal proxies on both sides.
Bipartite finite_graph(const std::vector<DiagramPoint>& fa, const std::vector<DiagramPoint>& fb,
                       double lambda, bool allow_diagonal) {
    const int na = static_cast<int>(fa.size());
    const int nb = static_cast<int>(fb.size());
    const int nl = allow_diagonal ? na + nb : na;
    const int nr = allow_diagonal ? nb + na : nb;
    Bipartite g(nl, nr);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            if (linf_dist(fa[static_cast<std::size_t>(i)], fb[static_cast<std::size_t>(j)]) <= lambda) g.add(i, j);
    if (allow_diagonal) {
        for (int i = 0; i < na; ++i)
            if (diagonal_gap(fa[static_cast<std::size_t>(i)]) <= lambda)
                for (int j = 0; j < na; ++j) g.add(i, nb + j);
        for (int j = 0; j < nb; ++j)
            if (diagonal_gap(fb[static_cast<std::size_t>(j)]) <= lambda)
                for (int i = 0; i < nb; ++i) g.add(na + i, j);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < na; ++j) g.add(na + i, nb + j);  // diagonal-diagonal
    }
    return g;
}

bool essentials_feasible(std::vector<double> ba, std::vector<double> bb, double lambda) {
    if (ba.size() != bb.size()) return false;
    std::sort(ba.begin(), ba.end());
    std::sort(bb.begin(), bb.end());
    for (std::size_t i = 0; i < ba.size(); ++i)
        if (std::abs(ba[i] - bb[i]) > lambda) return false;
    return true;
}

std::vector<double> candidate_costs(const std::vector<DiagramPoint>& fa,
                                    const std::vector<DiagramPoint>& fb,
                                    const std::vector<DiagramPoint>& ea,
                                    const std::vector<DiagramPoint>& eb, bool with_diagonal) {
    std::vector<double> c = {0.0};
    for (const auto& x : fa)
        for (const auto& y : fb) c.push_back(linf_dist(x, y));
    for (const auto& x : ea)
        for (const auto& y : eb) c.push_back(std::abs(x.birth - y.birth));
    if (with_diagonal) {
        for (const auto& x : fa) c.push_back(diagonal_gap(x));
        for (const auto& y : fb) c.push_back(diagonal_gap(y));
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

}  // namespace

std::pair<double, Matching> bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    const auto fa = a.finite_points();
    const auto fb = b.finite_points();
    const auto ea = a.essential_points();
    const auto eb = b.essential_points();
    if (ea.size() != eb.size()) return {kInf, Matching{{}, kInf}};

    std::vector<double> ba, bb;
    for (const auto& p : ea) ba.push_back(p.birth);
    for (const auto& p : eb) bb.push_back(p.birth);

    auto feasible = [&](double lambda) {
        if (!essentials_feasible(ba, bb, lambda)) return false;
        auto g = finite_graph(fa, fb, lambda, true);
        return g.solve().second == g.nl;
    };

    const auto costs = candidate_costs(fa, fb, ea, eb, true);
    std::size_t lo = 0, hi = costs.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible(costs[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    const double lambda = costs[lo];

    Matching m;
    m.cost = lambda;
    auto g = finite_graph(fa, fb, lambda, true);
    auto [match_l, size] = g.solve();
    (void)size;
    const int na = static_cast<int>(fa.size());
    const int nb = static_cast<int>(fb.size());
    for (int i = 0; i < na; ++i) {
        int r = match_l[static_cast<std::size_t>(i)];
        if (r >= 0 && r < nb)
            m.pairs.emplace_back(fa[static_cast<std::size_t>(i)], fb[static_cast<std::size_t>(r)]);
        else
            m.pairs.emplace_back(fa[static_cast<std::size_t>(i)], std::nullopt);
    }
    std::vector<bool> matched_b(static_cast<std::size_t>(nb), false);
    for (int i = 0; i < na; ++i) {
        int r = match_l[static_cast<std::size_t>(i)];
        if (r >= 0 && r < nb) matched_b[static_cast<std::size_t>(r)] = true;
    }
    for (int j = 0; j < nb; ++j)
        if (!matched_b[static_cast<std::size_t>(j)])
            m.pairs.emplace_back(std::nullopt, fb[static_cast<std::size_t>(j)]);

    // essentials pair in sorted birth order
    auto sa = ea;
    auto sb = eb;
    auto by_birth = [](const DiagramPoint& x, const DiagramPoint& y) { return x.birth < y.birth; };
    std::sort(sa.begin(), sa.end(), by_birth);
    std::sort(sb.begin(), sb.end(), by_birth);
    for (std::size_t i = 0; i < sa.size(); ++i) m.pairs.emplace_back(sa[i], sb[i]);
    return {lambda, m};
}

double bottleneck_no_diagonal(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    const auto fa = a.finite_points();
    const auto fb = b.finite_points();
    const auto ea = a.essential_points();
    const auto eb = b.essential_points();
    if (ea.size() != eb.size() || fa.size() != fb.size()) return kInf;

    std::vector<double> ba, bb;
    for (const auto& p : ea) ba.push_back(p.birth);
    for (const auto& p : eb) bb.push_back(p.birth);

    auto feasible = [&](double lambda) {
        if (!essentials_feasible(ba, bb, lambda)) return false;
        auto g = finite_graph(fa, fb, lambda, false);
        return g.solve().second == g.nl;
    };
    const auto costs = candidate_costs(fa, fb, ea, eb, false);
    if (!feasible(costs.back())) return kInf;
    std::size_t lo = 0, hi = costs.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible(costs[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return costs[lo];
}

bool multiset_equal(const PersistenceDiagram& a, const PersistenceDiagram& b, double tol) {
    return bottleneck_no_diagonal(a, b) <= tol;
}

}  // namespace starpht
