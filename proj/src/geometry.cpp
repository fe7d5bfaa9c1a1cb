#include "starpht/geometry.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>

namespace starpht {

double normalize_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;  // fmod rounding at the seam
    return t;
}

namespace {

double signed_area2(const std::vector<Point>& v) {
    double a = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % n];
        a += cross(p, q);
    }
    return a;
}

double coord_scale(const std::vector<Point>& v) {
    double s = 1.0;
    for (const Point& p : v) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
}

// Orientation of c relative to segment a->b: >0 left, <0 right, 0 collinear (within eps).
int orient(const Point& a, const Point& b, const Point& c, double eps) {
    double d = cross(b - a, c - a);
    if (d > eps) return 1;
    if (d < -eps) return -1;
    return 0;
}

bool on_segment(const Point& a, const Point& b, const Point& q, double eps) {
    if (orient(a, b, q, eps) != 0) return false;
    return q.x >= std::min(a.x, b.x) - eps && q.x <= std::max(a.x, b.x) + eps &&
           q.y >= std::min(a.y, b.y) - eps && q.y <= std::max(a.y, b.y) + eps;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d, double eps) {
    int o1 = orient(a, b, c, eps);
    int o2 = orient(a, b, d, eps);
    int o3 = orient(c, d, a, eps);
    int o4 = orient(c, d, b, eps);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c, eps)) return true;
    if (o2 == 0 && on_segment(a, b, d, eps)) return true;
    if (o3 == 0 && on_segment(c, d, a, eps)) return true;
    if (o4 == 0 && on_segment(c, d, b, eps)) return true;
    return false;
}

}  // namespace

double Polygon::area() const { return 0.5 * signed_area2(vertices); }

double Polygon::max_vertex_norm() const {
    double k = 0.0;
    for (const Point& p : vertices) k = std::max(k, norm(p));
    return k;
}

Polygon validate_polygon(const std::vector<Point>& raw, double tol) {
    if (raw.size() < 3) throw TooFewVertices{};
    for (const Point& p : raw) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw GeometryError("non-finite vertex coordinate");
    }
    const double scale = coord_scale(raw);
    const double eps = tol * scale;          // length comparisons
    const double ceps = tol * scale * scale; // cross-product comparisons

    // collapse duplicate consecutive vertices
    std::vector<Point> v;
    for (const Point& p : raw) {
        if (v.empty() || dist(v.back(), p) > eps) v.push_back(p);
    }
    while (v.size() > 1 && dist(v.front(), v.back()) <= eps) v.pop_back();

    // drop middle vertices of collinear consecutive triples
    bool changed = true;
    while (changed && v.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& a = v[(i + v.size() - 1) % v.size()];
            const Point& b = v[i];
            const Point& c = v[(i + 1) % v.size()];
            if (std::abs(cross(b - a, c - b)) <= ceps) {
                v.erase(v.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    if (v.size() < 3) throw TooFewVertices{};

    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // skip adjacent edges (they share an endpoint)
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n], ceps))
                throw SelfIntersecting{};
        }
    }

    double a2 = signed_area2(v);
    if (std::abs(a2) * 0.5 < tol * scale * scale) throw DegenerateArea{};
    if (a2 < 0.0) std::reverse(v.begin(), v.end());
    return Polygon{std::move(v)};
}

Hull convex_hull(const Polygon& p) {
    const std::size_t n = p.size();
    std::vector<int> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const Point& pa = p.vertices[static_cast<std::size_t>(a)];
        const Point& pb = p.vertices[static_cast<std::size_t>(b)];
        return pa.x < pb.x || (pa.x == pb.x && pa.y < pb.y);
    });

    const double scale = coord_scale(p.vertices);
    const double ceps = 1e-12 * scale * scale;
    auto build = [&](const std::vector<int>& order) {
        std::vector<int> chain;
        for (int i : order) {
            const Point& q = p.vertices[static_cast<std::size_t>(i)];
            while (chain.size() >= 2) {
                const Point& a = p.vertices[static_cast<std::size_t>(chain[chain.size() - 2])];
                const Point& b = p.vertices[static_cast<std::size_t>(chain.back())];
                if (cross(b - a, q - b) <= ceps)  // drops collinear hull points
                    chain.pop_back();
                else
                    break;
            }
            chain.push_back(i);
        }
        return chain;
    };

    std::vector<int> lower = build(idx);
    std::reverse(idx.begin(), idx.end());
    std::vector<int> upper = build(idx);

    std::vector<int> hull_idx(lower.begin(), lower.end() - 1);
    hull_idx.insert(hull_idx.end(), upper.begin(), upper.end() - 1);

    Hull h;
    for (int i : hull_idx) {
        h.vertices.push_back(p.vertices[static_cast<std::size_t>(i)]);
        h.polygon_index.push_back(i);
    }
    // rotate so hull traversal starts at the smallest polygon index
    auto it = std::min_element(h.polygon_index.begin(), h.polygon_index.end());
    auto shift = static_cast<std::size_t>(it - h.polygon_index.begin());
    std::rotate(h.vertices.begin(), h.vertices.begin() + static_cast<long>(shift), h.vertices.end());
    std::rotate(h.polygon_index.begin(), h.polygon_index.begin() + static_cast<long>(shift),
                h.polygon_index.end());
    return h;
}

double KernelPolygon::area() const {
    if (vertices.size() < 3) return 0.0;
    return 0.5 * std::abs(signed_area2(vertices));
}

KernelPolygon kernel(const Polygon& p) {
    // start from the bounding box of M, clip by each edge's interior half-plane
    double xmin = p.vertices[0].x, xmax = xmin, ymin = p.vertices[0].y, ymax = ymin;
    for (const Point& q : p.vertices) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    std::vector<Point> region = {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}};
    const double scale = coord_scale(p.vertices);
    const double eps = 1e-12 * scale;          // point dedup
    const double ceps = 1e-12 * scale * scale; // half-plane sign test

    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n && !region.empty(); ++i) {
        const Point a = p.vertices[i];
        const Point b = p.vertices[(i + 1) % n];
        const Point d = b - a;
        std::vector<Point> out;
        const std::size_t m = region.size();
        for (std::size_t j = 0; j < m; ++j) {
            const Point& cur = region[j];
            const Point& nxt = region[(j + 1) % m];
            double sc = cross(d, cur - a);
            double sn = cross(d, nxt - a);
            if (sc >= -ceps) out.push_back(cur);
            if ((sc > ceps && sn < -ceps) || (sc < -ceps && sn > ceps)) {
                double t = sc / (sc - sn);
                out.push_back(cur + t * (nxt - cur));
            }
        }
        // drop duplicates introduced by clipping
        std::vector<Point> clean;
        for (const Point& q : out) {
            if (clean.empty() || dist(clean.back(), q) > eps) clean.push_back(q);
        }
        while (clean.size() > 1 && dist(clean.front(), clean.back()) <= eps) clean.pop_back();
        region = std::move(clean);
    }
    return KernelPolygon{std::move(region)};
}

bool kernel_contains(const KernelPolygon& k, const Point& q, double tol) {
    if (k.empty()) return false;
    const std::size_t n = k.vertices.size();
    if (n == 1) return dist(k.vertices[0], q) <= tol;
    if (n == 2) return on_segment(k.vertices[0], k.vertices[1], q, tol);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = k.vertices[i];
        const Point& b = k.vertices[(i + 1) % n];
        if (cross(b - a, q - a) < -tol * std::max(1.0, norm(b - a))) return false;
    }
    return true;
}

Point choose_center(const KernelPolygon& k) {
    if (k.empty()) throw EmptyKernel{};
    const std::size_t n = k.vertices.size();
    if (n == 1) return k.vertices[0];
    if (n == 2 || k.area() < 1e-15 * coord_scale(k.vertices) * coord_scale(k.vertices)) {
        // degenerate kernel: midpoint of the two farthest vertices
        std::size_t bi = 0, bj = 1;
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double d = dist(k.vertices[i], k.vertices[j]);
                if (d > best) { best = d; bi = i; bj = j; }
            }
        return 0.5 * (k.vertices[bi] + k.vertices[bj]);
    }

    // Chebyshev center: maximize r subject to n_i . q - r >= n_i . a_i for the
    // inward unit normal n_i of each kernel edge. Optimum sits on a triple of
    // active constraints; kernels are tiny, enumerate them all.
    struct HalfPlane { Point nrm; double off; };
    std::vector<HalfPlane> hp;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = k.vertices[i];
        const Point& b = k.vertices[(i + 1) % n];
        Point d = b - a;
        double len = norm(d);
        if (len <= 0.0) continue;
        Point nrm{-d.y / len, d.x / len};  // inward for CCW
        hp.push_back({nrm, dot(nrm, a)});
    }

    double best_r = -1.0;
    Point best_q{};
    const double feas_eps = 1e-9 * coord_scale(k.vertices);
    auto consider = [&](const Point& q, double r) {
        if (r < 0.0) return;
        for (const HalfPlane& h : hp) {
            if (dot(h.nrm, q) - r < h.off - feas_eps) return;
        }
        if (r > best_r + 1e-12 ||
            (std::abs(r - best_r) <= 1e-12 &&
             (q.x < best_q.x - 1e-12 ||
              (std::abs(q.x - best_q.x) <= 1e-12 && q.y < best_q.y)))) {
            best_r = r;
            best_q = q;
        }
    };

    const std::size_t m = hp.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t l = j + 1; l < m; ++l) {
                // solve [nx ny -1][qx qy r]^T = off for the three constraints
                std::array<std::array<double, 3>, 3> A = {{
                    {hp[i].nrm.x, hp[i].nrm.y, -1.0},
                    {hp[j].nrm.x, hp[j].nrm.y, -1.0},
                    {hp[l].nrm.x, hp[l].nrm.y, -1.0},
                }};
                std::array<double, 3> rhs = {hp[i].off, hp[j].off, hp[l].off};
                double det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                             A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                             A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
                if (std::abs(det) < 1e-14) continue;
                auto solve = [&](int col) {
                    std::array<std::array<double, 3>, 3> B = A;
                    for (int r2 = 0; r2 < 3; ++r2) B[static_cast<std::size_t>(r2)][static_cast<std::size_t>(col)] = rhs[static_cast<std::size_t>(r2)];
                    return (B[0][0] * (B[1][1] * B[2][2] - B[1][2] * B[2][1]) -
                            B[0][1] * (B[1][0] * B[2][2] - B[1][2] * B[2][0]) +
                            B[0][2] * (B[1][0] * B[2][1] - B[1][1] * B[2][0])) /
                           det;
                };
                consider(Point{solve(0), solve(1)}, solve(2));
            }
    if (best_r < 0.0) {
        // numerically flat kernel; fall back to the degenerate policy
        std::size_t bi = 0, bj = 1;
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double d = dist(k.vertices[i], k.vertices[j]);
                if (d > best) { best = d; bi = i; bj = j; }
            }
        return 0.5 * (k.vertices[bi] + k.vertices[bj]);
    }
    return best_q;
}

std::vector<Sector> sectors(const Polygon& p, const Point& c, const Hull& h) {
    if (!kernel_contains(kernel(p), c, 1e-9 * coord_scale(p.vertices)))
        throw CenterNotInKernel{};

    const std::size_t n = p.size();
    const std::size_t m = h.size();
    const double scale = coord_scale(p.vertices);
    std::vector<Sector> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        int ia = h.polygon_index[i];
        int ib = h.polygon_index[(i + 1) % m];
        Sector s;
        s.index = static_cast<int>(i);
        s.hull_a = h.vertices[i];
        s.hull_b = h.vertices[(i + 1) % m];
        s.center = c;
        s.region.push_back(c);
        s.vertex_ids.push_back(-1);
        for (int j = ia;; j = (j + 1) % static_cast<int>(n)) {
            s.region.push_back(p.vertices[static_cast<std::size_t>(j)]);
            s.vertex_ids.push_back(j);
            if (j == ib) break;
        }
        // boundary centers can coincide with a hull vertex; drop the duplicate
        if (dist(s.region[1], c) <= 1e-12 * scale) {
            s.region.erase(s.region.begin());
            s.vertex_ids.erase(s.vertex_ids.begin());
        } else if (dist(s.region.back(), c) <= 1e-12 * scale) {
            s.region.pop_back();
            s.vertex_ids.pop_back();
        }
        s.zero_area = std::abs(signed_area2(s.region)) * 0.5 <= 1e-12 * scale * scale;
        out.push_back(std::move(s));
    }
    return out;
}

std::pair<bool, std::optional<ParallelWitness>> is_general_position(const Polygon& p, double tol) {
    const std::size_t n = p.size();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    for (std::size_t a = 0; a < pairs.size(); ++a) {
        const Point da = p.vertices[static_cast<std::size_t>(pairs[a].second)] -
                         p.vertices[static_cast<std::size_t>(pairs[a].first)];
        const double la = norm(da);
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            const Point db = p.vertices[static_cast<std::size_t>(pairs[b].second)] -
                             p.vertices[static_cast<std::size_t>(pairs[b].first)];
            const double lb = norm(db);
            if (std::abs(cross(da, db)) > tol * la * lb) continue;  // not parallel
            // identical supporting line does not violate general position
            const Point w = p.vertices[static_cast<std::size_t>(pairs[b].first)] -
                            p.vertices[static_cast<std::size_t>(pairs[a].first)];
            if (std::abs(cross(da, w)) <= tol * la * std::max(norm(w), la)) continue;
            return {false, ParallelWitness{pairs[a], pairs[b]}};
        }
    }
    return {true, std::nullopt};
}

CriticalAngleSet critical_angles(const Polygon& p, double tol) {
    const std::size_t n = p.size();
    std::vector<CriticalAngle> raw;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point d = p.vertices[j] - p.vertices[i];
            const double phi = std::atan2(d.y, d.x);
            for (double t : {phi + kTwoPi / 4.0, phi - kTwoPi / 4.0}) {
                CriticalAngle ca;
                ca.theta = normalize_angle(t);
                ca.witnesses.emplace_back(static_cast<int>(i), static_cast<int>(j));
                raw.push_back(std::move(ca));
            }
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const CriticalAngle& a, const CriticalAngle& b) { return a.theta < b.theta; });

    CriticalAngleSet out;
    for (CriticalAngle& ca : raw) {
        if (!out.angles.empty() && ca.theta - out.angles.back().theta <= tol) {
            auto& w = out.angles.back().witnesses;
            w.insert(w.end(), ca.witnesses.begin(), ca.witnesses.end());
        } else {
            out.angles.push_back(std::move(ca));
        }
    }
    // merge across the 0 / 2pi seam
    if (out.angles.size() > 1 &&
        kTwoPi - out.angles.back().theta + out.angles.front().theta <= tol) {
        auto& w = out.angles.front().witnesses;
        w.insert(w.end(), out.angles.back().witnesses.begin(), out.angles.back().witnesses.end());
        out.angles.pop_back();
    }
    return out;
}

bool point_in_polygon(const Polygon& p, const Point& q, double tol) {
    const std::size_t n = p.size();
    const double eps = tol * coord_scale(p.vertices);
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = p.vertices[i];
        const Point& b = p.vertices[j];
        if (on_segment(a, b, q, eps)) return true;
        if ((a.y > q.y) != (b.y > q.y)) {
            double xin = (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x;
            if (q.x < xin) inside = !inside;
        }
    }
    return inside;
}

bool segment_in_polygon(const Polygon& p, const Point& a, const Point& b, int samples) {
    for (int i = 0; i <= samples; ++i) {
        double t = static_cast<double>(i) / samples;
        if (!point_in_polygon(p, a + t * (b - a), 1e-9)) return false;
    }
    return true;
}

}  // namespace starpht
