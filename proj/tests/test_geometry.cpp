#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "starpht/generators.hpp"
#include "starpht/geometry.hpp"

using namespace starpht;
using starpht::testing::arrowhead;

TEST_CASE("validate_polygon accepts the unit square CCW with area 1") {
    const Polygon p = validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(p.size() == 4);
    CHECK(p.area() == doctest::Approx(1.0));
}

TEST_CASE("validate_polygon fixes clockwise orientation") {
    const Polygon p = validate_polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(p.area() > 0.0);
}

TEST_CASE("validate_polygon collapses duplicates and collinear middles") {
    const Polygon p = validate_polygon(
        {{0, 0}, {0.5, 0.0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(p.size() == 4);
}

TEST_CASE("validate_polygon rejects bad input") {
    CHECK_THROWS_AS((void)validate_polygon({{0, 0}, {1, 0}}), TooFewVertices);
    CHECK_THROWS_AS((void)validate_polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), SelfIntersecting);
    CHECK_THROWS_AS((void)validate_polygon({{0, 0}, {1, 0}, {2, 0}, {3, 0}}), GeometryError);
}

TEST_CASE("convex_hull of convex shapes is the shape itself") {
    CHECK(convex_hull(validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).size() == 4);
    CHECK(convex_hull(regular_ngon(5)).size() == 5);
}

TEST_CASE("convex_hull of the arrowhead drops the reflex vertex") {
    const Hull h = convex_hull(arrowhead());
    REQUIRE(h.size() == 4);
    for (int idx : h.polygon_index) CHECK(idx != 3);  // (2,1) is reflex
}

TEST_CASE("convex_hull drops collinear boundary points") {
    const Hull h = convex_hull(validate_polygon({{0, 0}, {2, 0}, {2, 2}, {1, 3}, {0, 2}}));
    CHECK(h.size() == 5);
    const Hull h2 = convex_hull(validate_polygon({{0, 0}, {1, -0.0001}, {2, 0}, {2, 2}, {0, 2}}));
    CHECK(h2.size() == 5);
    const Hull h3 = convex_hull(validate_polygon({{0, 0}, {1, 0.0001}, {2, 0}, {2, 2}, {0, 2}}));
    CHECK(h3.size() == 4);  // the nudged vertex is interior to the hull
}

TEST_CASE("kernel of a convex polygon is the polygon") {
    const KernelPolygon k = kernel(validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(k.area() == doctest::Approx(1.0));
}

TEST_CASE("kernel of the arrowhead contains (2, 0.5)") {
    const KernelPolygon k = kernel(arrowhead());
    REQUIRE(!k.empty());
    CHECK(kernel_contains(k, {2.0, 0.5}));
    CHECK(!kernel_contains(k, {0.5, 2.5}));
}

TEST_CASE("kernel of the spiral is empty") {
    CHECK(kernel(spiral(1.5, 12)).empty());
}

TEST_CASE("kernel points see every boundary vertex") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
        const Polygon p = random_star(10, seed);
        const KernelPolygon k = kernel(p);
        REQUIRE(!k.empty());
        Point c{0, 0};
        for (const Point& v : k.vertices) c = c + (1.0 / k.vertices.size()) * v;
        for (const Point& v : p.vertices) CHECK(segment_in_polygon(p, c, v));
    }
}

TEST_CASE("choose_center of the unit square is its middle") {
    const Point c = choose_center(kernel(validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
    CHECK(c.x == doctest::Approx(0.5));
    CHECK(c.y == doctest::Approx(0.5));
}

TEST_CASE("choose_center of a degenerate kernel is the extreme midpoint") {
    KernelPolygon k;
    k.vertices = {{0, 0}, {2, 0}};
    const Point c = choose_center(k);
    CHECK(c.x == doctest::Approx(1.0));
    CHECK(c.y == doctest::Approx(0.0));
}

TEST_CASE("sectors of the unit square are four quarter triangles") {
    const Polygon p = validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto secs = sectors(p, {0.5, 0.5}, convex_hull(p));
    REQUIRE(secs.size() == 4);
    for (const Sector& s : secs) {
        REQUIRE(s.region.size() == 3);
        double a = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            a += cross(s.region[i], s.region[(i + 1) % 3]);
        CHECK(0.5 * a == doctest::Approx(0.25));
    }
}

TEST_CASE("sectors of a regular hexagon are six congruent triangles") {
    const Polygon p = regular_ngon(6);
    const Point c = choose_center(kernel(p));
    const auto secs = sectors(p, c, convex_hull(p));
    REQUIRE(secs.size() == 6);
    for (const Sector& s : secs) CHECK(s.region.size() == 3);
}

TEST_CASE("sectors of the arrowhead cover it with the reflex vertex in the top sector") {
    const Polygon p = arrowhead();
    const auto secs = sectors(p, {2.0, 0.5}, convex_hull(p));
    REQUIRE(secs.size() == 4);
    double total = 0.0;
    bool reflex_seen = false;
    for (const Sector& s : secs) {
        double a = 0.0;
        const std::size_t n = s.region.size();
        for (std::size_t i = 0; i < n; ++i)
            a += cross(s.region[i], s.region[(i + 1) % n]);
        total += 0.5 * a;
        for (int id : s.vertex_ids)
            if (id == 3) {
                reflex_seen = true;
                // the sector over the top hull edge (4,3)-(0,3)
                CHECK(s.hull_a.y == doctest::Approx(3.0));
                CHECK(s.hull_b.y == doctest::Approx(3.0));
            }
    }
    CHECK(total == doctest::Approx(p.area()));
    CHECK(reflex_seen);
}

TEST_CASE("general position fails for the square with a parallel witness") {
    auto [ok, witness] = is_general_position(validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(!ok);
    REQUIRE(witness.has_value());
    CHECK(witness->pair_a != witness->pair_b);
}

TEST_CASE("general position holds for random stars") {
    for (std::uint64_t seed : {11ULL, 12ULL, 13ULL})
        CHECK(is_general_position(random_star(9, seed)).first);
}

TEST_CASE("critical angles: square has 8, regular pentagon merges to 10") {
    CHECK(critical_angles(validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).size() == 8);
    CHECK(critical_angles(regular_ngon(5)).size() == 10);
}

TEST_CASE("critical angles are closed under antipody and separate all ties") {
    const Polygon p = random_star(8, 42);
    const CriticalAngleSet cas = critical_angles(p);
    for (const CriticalAngle& ca : cas.angles) {
        const double anti = normalize_angle(ca.theta + kTwoPi / 2.0);
        bool found = false;
        for (const CriticalAngle& cb : cas.angles)
            if (std::abs(cb.theta - anti) < 1e-9) found = true;
        CHECK(found);
        REQUIRE(!ca.witnesses.empty());
        for (auto [i, j] : ca.witnesses) {
            const Direction v(ca.theta);
            CHECK(height(p.vertices[static_cast<std::size_t>(i)], v) ==
                  doctest::Approx(height(p.vertices[static_cast<std::size_t>(j)], v)));
        }
    }
    // between critical angles all vertex heights are distinct
    for (std::size_t i = 0; i < cas.size(); ++i) {
        const double a = cas.angles[i].theta;
        const double b = (i + 1 < cas.size()) ? cas.angles[i + 1].theta
                                              : cas.angles[0].theta + kTwoPi;
        const Direction v(0.5 * (a + b));
        std::vector<double> hs;
        for (const Point& q : p.vertices) hs.push_back(height(q, v));
        std::sort(hs.begin(), hs.end());
        for (std::size_t j = 1; j < hs.size(); ++j) CHECK(hs[j] - hs[j - 1] > 1e-9);
    }
}

TEST_CASE("point_in_polygon agrees with the kernel on convex shapes") {
    const Polygon p = regular_ngon(7);
    CHECK(point_in_polygon(p, {0, 0}));
    CHECK(!point_in_polygon(p, {2, 2}));
}
