#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "starpht/generators.hpp"
#include "starpht/persistence.hpp"

using namespace starpht;
namespace tst = starpht::testing;

TEST_CASE("sweep_complex: elder rule with index tie-break on a path") {
    // heights 0, 1, 0 under v = (1, 0): two births at 0, merge at 1
    const std::vector<Point> verts = {{0, 0}, {1, 0}, {0, 1}};
    const std::vector<int> ids = {0, 1, 2};
    const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}};
    const PersistenceDiagram d = sweep_complex(verts, ids, edges, Direction(0.0));
    REQUIRE(d.size() == 2);
    const auto ess = d.essential_points();
    const auto fin = d.finite_points();
    REQUIRE(ess.size() == 1);
    REQUIRE(fin.size() == 1);
    CHECK(ess[0].birth_vertex == 0);  // lower index survives the merge
    CHECK(fin[0].birth == doctest::Approx(0.0));
    CHECK(fin[0].death == doctest::Approx(1.0));
    CHECK(fin[0].birth_vertex == 2);
    CHECK(fin[0].death_vertex == 1);
}

TEST_CASE("sweep_complex: flat edge births once at the lower-indexed endpoint") {
    const std::vector<Point> verts = {{0, 0}, {0, 1}, {1, 2}};
    const std::vector<int> ids = {0, 1, 2};
    const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}};
    const PersistenceDiagram d = sweep_complex(verts, ids, edges, Direction(0.0));
    REQUIRE(d.size() == 1);  // the zero-persistence tie point is dropped
    CHECK(d.points[0].essential);
    CHECK(d.points[0].birth_vertex == 0);
}

TEST_CASE("arrowhead golden diagram at 3pi/2") {
    const Polygon p = tst::arrowhead();
    const double theta = 3.0 * kTwoPi / 4.0;
    for (const PersistenceDiagram& d :
         {boundary_sweep_diagram(p, {2.0, 0.5}, Direction(theta)),
          lower_star_diagram(triangulate(p), Direction(theta))}) {
        REQUIRE(d.size() == 2);
        const auto ess = d.essential_points();
        const auto fin = d.finite_points();
        REQUIRE(ess.size() == 1);
        REQUIRE(fin.size() == 1);
        CHECK(std::abs(ess[0].birth - (-3.0)) < 1e-12);
        CHECK(std::abs(fin[0].birth - (-3.0)) < 1e-12);
        CHECK(std::abs(fin[0].death - (-1.0)) < 1e-12);
        CHECK(ess[0].birth_vertex == 2);
        CHECK(fin[0].birth_vertex == 4);
        CHECK(fin[0].death_vertex == 3);
    }
}

TEST_CASE("boundary sweep requires a center") {
    CHECK_THROWS_AS(
        (void)boundary_sweep_diagram(tst::arrowhead(), {0.5, 2.5}, Direction(1.0)),
        NotACenter);
}

TEST_CASE("boundary sweep agrees with lower-star across a corpus") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Polygon p = random_star(8 + static_cast<int>(seed % 9), seed);
        const Point c = choose_center(kernel(p));
        const Triangulation tri = triangulate(p);
        for (int i = 0; i < 16; ++i) {
            const Direction v(kTwoPi * (i + 0.13) / 16.0);
            const auto [gap, m] =
                bottleneck(boundary_sweep_diagram(p, c, v), lower_star_diagram(tri, v));
            CHECK(gap <= 1e-9);
        }
    }
}

TEST_CASE("triangulation sizes: k-2 triangles, euler check on edges") {
    CHECK(triangulate(spiral(1.5, 12)).triangles.size() == 10);
    const Triangulation t = triangulate(tst::arrowhead());
    CHECK(t.triangles.size() == 3);
    // E = V + T - 1 for a triangulated disk
    CHECK(t.edges.size() == t.vertices.size() + t.triangles.size() - 1);
}

TEST_CASE("lower-star diagram matches breadth-first component counts") {
    std::vector<Polygon> shapes = {spiral(1.5, 12), tst::arrowhead(), random_star(14, 99)};
    for (const Polygon& p : shapes) {
        const Triangulation tri = triangulate(p);
        for (int k = 0; k < 4; ++k) {
            const Direction v(kTwoPi * (k + 0.37) / 4.0);
            const PersistenceDiagram d = lower_star_diagram(tri, v);
            double lo = kInf, hi = -kInf;
            for (const Point& q : p.vertices) {
                lo = std::min(lo, height(q, v));
                hi = std::max(hi, height(q, v));
            }
            for (int s = 0; s < 50; ++s) {
                const double t = lo + (hi - lo) * (s + 0.5) / 50.0;
                CHECK(tst::diagram_components_at(d, t) == tst::components_at(tri, v, t));
            }
        }
    }
}

TEST_CASE("reduce removes the minimal essential point; unreduce restores it") {
    PersistenceDiagram d;
    d.points.push_back({-1.0, kInf, 4, -1, true});
    d.points.push_back({-2.0, kInf, 1, -1, true});
    d.points.push_back({-1.5, 0.0, 2, 3, false});
    DiagramPoint removed;
    const PersistenceDiagram r = reduce(d, &removed);
    CHECK(r.size() == 2);
    CHECK(removed.birth == doctest::Approx(-2.0));
    CHECK(removed.birth_vertex == 1);
    const PersistenceDiagram back = unreduce(r, removed);
    CHECK(multiset_equal(back, d, 1e-12));

    PersistenceDiagram empty;
    CHECK_THROWS_AS((void)reduce(empty), NoEssentialClass);
}

TEST_CASE("bottleneck against the brute-force matching oracle") {
    std::mt19937_64 g(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const PersistenceDiagram a = tst::random_diagram(g, 3, trial % 2);
        const PersistenceDiagram b = tst::random_diagram(g, 3, trial % 2);
        const double got = bottleneck(a, b).first;
        const double want = tst::bottleneck_oracle(a, b);
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("bottleneck basics") {
    PersistenceDiagram a, b;
    a.points.push_back({0.0, 2.0, -1, -1, false});
    CHECK(bottleneck(a, b).first == doctest::Approx(1.0));  // (d - b) / 2 to diagonal
    b.points.push_back({0.5, 2.2, -1, -1, false});
    CHECK(bottleneck(a, b).first == doctest::Approx(0.5));
    const auto [cost, match] = bottleneck(a, a);
    CHECK(cost == doctest::Approx(0.0));
    REQUIRE(match.pairs.size() == 1);
}

TEST_CASE("bottleneck matching realizes the reported cost") {
    std::mt19937_64 g(7);
    for (int trial = 0; trial < 20; ++trial) {
        const PersistenceDiagram a = tst::random_diagram(g, 3, 1);
        const PersistenceDiagram b = tst::random_diagram(g, 3, 1);
        const auto [cost, match] = bottleneck(a, b);
        double realized = 0.0;
        for (const auto& [pa, pb] : match.pairs) {
            if (pa && pb)
                realized = std::max(realized, linf_dist(*pa, *pb));
            else if (pa)
                realized = std::max(realized, diagonal_gap(*pa));
            else if (pb)
                realized = std::max(realized, diagonal_gap(*pb));
        }
        CHECK(realized == doctest::Approx(cost).epsilon(1e-9));
    }
}

TEST_CASE("bottleneck_no_diagonal and multiset_equal") {
    PersistenceDiagram a, b;
    a.points.push_back({0.0, 1.0, 0, 1, false});
    a.points.push_back({-1.0, 3.0, 2, 3, false});
    b.points.push_back({-1.0, 3.0, 2, 3, false});
    CHECK(bottleneck_no_diagonal(a, b) == kInf);  // cardinality mismatch
    b.points.push_back({0.0, 1.0, 0, 1, false});
    CHECK(bottleneck_no_diagonal(a, b) == doctest::Approx(0.0));
    CHECK(multiset_equal(a, b, 1e-12));
    b.points[0].birth += 1e-6;
    CHECK(!multiset_equal(a, b, 1e-9));
    CHECK(multiset_equal(a, b, 1e-3));
}

TEST_CASE("sector diagram of the arrowhead top sector at 3pi/2") {
    const Polygon p = tst::arrowhead();
    const auto secs = sectors(p, {2.0, 0.5}, convex_hull(p));
    const Direction v(3.0 * kTwoPi / 4.0);
    int nonempty_reduced = 0;
    for (const Sector& s : secs) {
        const PersistenceDiagram rd = reduce(sector_diagram(s, v));
        if (rd.size() == 0) continue;
        ++nonempty_reduced;
        REQUIRE(rd.size() == 1);
        CHECK(std::abs(rd.points[0].birth - (-3.0)) < 1e-12);
        CHECK(std::abs(rd.points[0].death - (-1.0)) < 1e-12);
        CHECK(s.hull_a.y == doctest::Approx(3.0));  // housed in the top sector
    }
    CHECK(nonempty_reduced == 1);
}

TEST_CASE("sector diagrams clamp deaths at the center height") {
    const Polygon p = tst::arrowhead();
    const auto secs = sectors(p, {2.0, 0.5}, convex_hull(p));
    for (const Sector& s : secs) {
        for (int i = 0; i < 8; ++i) {
            const Direction v(kTwoPi * (i + 0.21) / 8.0);
            const double hc = height(s.center, v);
            for (const DiagramPoint& pt : sector_diagram(s, v).points) {
                if (!pt.essential) CHECK(pt.death <= hc + 1e-12);
                CHECK(pt.birth <= hc + 1e-12);
            }
        }
    }
}
