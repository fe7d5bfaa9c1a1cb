#pragma once

#include <cstdint>
#include <stdexcept>

#include "starpht/geometry.hpp"

namespace starpht {

struct GenerationFailed : std::runtime_error {
    explicit GenerationFailed(const std::string& what) : std::runtime_error(what) {}
};

Polygon regular_ngon(int n, double radius = 1.0);

// Radial polygon around the origin: sorted random angles, random radii.
// The origin is always interior to the kernel; resamples (capped) until the
// polygon validates, all angle gaps are below pi, and vertices are in
// general position.
Polygon random_star(int k, std::uint64_t seed);

// Spiral band of `turns` revolutions with k vertices (k even, >= 8); the
// kernel is empty once the band overlaps itself (turns > 1). Deterministic;
// small built-in angular jitter keeps the vertices out of degenerate
// alignments.
Polygon spiral(double turns, int k);

// k random points on the unit circle, sorted by angle.
Polygon random_convex(int k, std::uint64_t seed);

}  // namespace starpht
