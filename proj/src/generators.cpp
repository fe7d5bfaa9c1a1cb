#include "starpht/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace starpht {

namespace {

struct Rng {
    std::mt19937_64 g;

    explicit Rng(std::uint64_t seed) : g(seed) {}

    double uniform(double a, double b) {
        const double u = static_cast<double>(g() >> 11) * 0x1.0p-53;
        return a + u * (b - a);
    }
};

}  // namespace

Polygon regular_ngon(int n, double radius) {
    if (n < 3) throw GenerationFailed("regular_ngon needs n >= 3");
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        const double t = kTwoPi * i / n;
        pts.push_back({radius * std::cos(t), radius * std::sin(t)});
    }
    return validate_polygon(pts);
}

Polygon random_star(int k, std::uint64_t seed) {
    if (k < 3) throw GenerationFailed("random_star needs k >= 3");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> angles;
        for (int i = 0; i < k; ++i) angles.push_back(rng.uniform(0.0, kTwoPi));
        std::sort(angles.begin(), angles.end());
        double max_gap = angles.front() + kTwoPi - angles.back();
        for (int i = 1; i < k; ++i) max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
        if (max_gap >= 3.0) continue;  // keep the origin safely inside the kernel
        std::vector<Point> pts;
        for (double a : angles) {
            const double r = rng.uniform(0.5, 2.0);
            pts.push_back({r * std::cos(a), r * std::sin(a)});
        }
        try {
            Polygon p = validate_polygon(pts);
            if (static_cast<int>(p.vertices.size()) != k) continue;
            if (!is_general_position(p).first) continue;
            return p;
        } catch (const GeometryError&) {
            continue;
        }
    }
    throw GenerationFailed("random_star: resample cap reached");
}

Polygon spiral(double turns, int k) {
    if (k < 8 || k % 2 != 0) throw GenerationFailed("spiral needs even k >= 8");
    if (turns <= 0.0) throw GenerationFailed("spiral needs turns > 0");
    const int m = k / 2 - 1;  // spine segments per side
    const double total = turns * kTwoPi;
    const double dt = total / m;
    // vertices sit at r/c so chords never sag inside the nominal spiral r(t)
    const double c = std::cos(0.5 * dt);
    if (c <= 0.1) throw GenerationFailed("spiral: too few vertices for the requested turns");
    // widest band that clears the next pass (gap 2 per turn) despite the
    // circumscribed vertices poking out to (r + w)/c
    double width = 0.6;
    if (turns > 1.0) {
        const double r_overlap = 1.0 + 2.0 * (turns - 1.0);
        width = std::min(width, c * (r_overlap + 1.9) - r_overlap);
    }
    if (width <= 0.05) throw GenerationFailed("spiral: too few vertices for the requested turns");
    std::vector<double> ts;
    for (int i = 0; i <= m; ++i) {
        double t = total * i / m;
        if (i > 0 && i < m) t += 0.013 * std::sin(7.3 * i + 1.0);  // deterministic jitter
        ts.push_back(t);
    }
    auto at = [&](double t, double offset) {
        const double r = (1.0 + t / (0.5 * kTwoPi) + offset) / c;
        return Point{r * std::cos(t), r * std::sin(t)};
    };
    std::vector<Point> pts;
    for (int i = 0; i <= m; ++i) pts.push_back(at(ts[static_cast<std::size_t>(i)], 0.0));
    for (int i = m; i >= 0; --i) pts.push_back(at(ts[static_cast<std::size_t>(i)], width));
    return validate_polygon(pts);
}

Polygon random_convex(int k, std::uint64_t seed) {
    if (k < 3) throw GenerationFailed("random_convex needs k >= 3");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> angles;
        for (int i = 0; i < k; ++i) angles.push_back(rng.uniform(0.0, kTwoPi));
        std::sort(angles.begin(), angles.end());
        bool close = false;
        for (int i = 1; i < k; ++i)
            if (angles[i] - angles[i - 1] < 1e-3) close = true;
        if (close) continue;
        std::vector<Point> pts;
        for (double a : angles) pts.push_back({std::cos(a), std::sin(a)});
        try {
            Polygon p = validate_polygon(pts);
            if (static_cast<int>(p.vertices.size()) != k) continue;
            return p;
        } catch (const GeometryError&) {
            continue;
        }
    }
    throw GenerationFailed("random_convex: resample cap reached");
}

}  // namespace starpht
