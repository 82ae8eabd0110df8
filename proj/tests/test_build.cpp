#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "spanners/build.hpp"
#include "spanners/generate.hpp"

using namespace spanners;

namespace {

// Independent per-cone minimum scan, written without the library's
// selection helpers.
std::set<std::pair<int, int>> brute_force_edges(const PointSet& pts,
                                                const ConeScheme& scheme,
                                                bool yao) {
    std::set<std::pair<int, int>> edges;
    for (const Point& a : pts) {
        for (int cone = 0; cone < scheme.k; ++cone) {
            int best = -1;
            double best_primary = 0, best_secondary = 0;
            for (const Point& b : pts) {
                if (b.id == a.id) continue;
                if (cone_index(scheme, a, b) != cone) continue;
                double len = std::hypot(b.x - a.x, b.y - a.y);
                double proj = bisector_projection(scheme, a, b);
                double primary = yao ? len : proj;
                double secondary = yao ? proj : len;
                if (best < 0 || primary < best_primary ||
                    (primary == best_primary && secondary < best_secondary) ||
                    (primary == best_primary && secondary == best_secondary &&
                     b.id < best)) {
                    best = b.id;
                    best_primary = primary;
                    best_secondary = secondary;
                }
            }
            if (best >= 0) edges.insert({a.id, best});
        }
    }
    return edges;
}

std::set<std::pair<int, int>> edge_pairs(const SpannerGraph& g) {
    std::set<std::pair<int, int>> pairs;
    for (const DirectedEdge& e : g.edges) pairs.insert({e.source, e.target});
    return pairs;
}

}  // namespace

TEST_CASE("two points produce one edge in each direction") {
    PointSet pts = {{0, 0, 0}, {1, 3, 1}};
    for (int k : {3, 6, 30}) {
        SpannerGraph yao = build_yao(pts, ConeScheme(k));
        CHECK(yao.edges.size() == 2);
        CHECK(edge_pairs(yao) == std::set<std::pair<int, int>>{{0, 1}, {1, 0}});
    }
}

TEST_CASE("Yao picks the nearest point, Theta the nearest projection") {
    // in cone C_{6,1}(a): b1 nearer in distance, b2 nearer in projection
    double r1 = 0.7, r2 = 0.72, ang2 = 0.03;
    PointSet pts = {{0, 0.0, 0.0},
                    {1, r1 * std::cos(kPi / 6), r1 * std::sin(kPi / 6)},
                    {2, r2 * std::cos(ang2), r2 * std::sin(ang2)}};
    ConeScheme six(6);
    REQUIRE(cone_index(six, pts[0], pts[1]) == 0);
    REQUIRE(cone_index(six, pts[0], pts[2]) == 0);

    SpannerGraph yao = build_yao(pts, six);
    SpannerGraph theta = build_theta(pts, six);
    auto out_of_a = [](const SpannerGraph& g) {
        for (const DirectedEdge& e : g.edges) {
            if (e.source == 0 && e.cone == 0) return e.target;
        }
        return -1;
    };
    CHECK(out_of_a(yao) == 1);
    CHECK(out_of_a(theta) == 2);
}

TEST_CASE("collinear points on a bisector: nearest wins in Theta") {
    double bis = kPi / 6;
    PointSet pts = {{0, 0, 0},
                    {1, 2 * std::cos(bis), 2 * std::sin(bis)},
                    {2, 5 * std::cos(bis), 5 * std::sin(bis)}};
    SpannerGraph theta = build_theta(pts, ConeScheme(6));
    for (const DirectedEdge& e : theta.edges) {
        if (e.source == 0) CHECK(e.target == 1);
    }
}

TEST_CASE("forward builds agree with the brute-force scan") {
    for (auto [k, yao] : {std::pair{6, true}, {30, false}, {6, false}, {30, true}}) {
        PointSet pts = generate({Distribution::Uniform, 20, 42, 10.0});
        ConeScheme scheme(k);
        SpannerGraph g = yao ? build_yao(pts, scheme) : build_theta(pts, scheme);
        CHECK(edge_pairs(g) == brute_force_edges(pts, scheme, yao));
    }
}

TEST_CASE("out-degree equals the number of nonempty cones") {
    PointSet pts = generate({Distribution::Uniform, 40, 3, 50.0});
    for (int k : {6, 12}) {
        ConeScheme scheme(k);
        SpannerGraph g = build_theta(pts, scheme);
        for (const Point& a : pts) {
            std::set<int> nonempty;
            for (const Point& b : pts) {
                if (b.id != a.id) nonempty.insert(cone_index(scheme, a, b));
            }
            int out_deg = 0;
            for (const DirectedEdge& e : g.edges) {
                if (e.source == a.id) ++out_deg;
            }
            CHECK(out_deg == static_cast<int>(nonempty.size()));
            CHECK(out_deg <= k);
        }
    }
}

TEST_CASE("reverse_filter is the identity when in-classes are singletons") {
    // every vertex sees the other two in distinct cones, both ways
    PointSet pts = {{0, 0, 0}, {1, 10, 1}, {2, 5, 9}};
    SpannerGraph theta = build_theta(pts, ConeScheme(6));
    SpannerGraph filtered = reverse_filter(theta);
    CHECK(filtered.kind == GraphKind::ThetaTheta);
    CHECK(edge_pairs(filtered) == edge_pairs(theta));
}

TEST_CASE("reverse_filter caps the circle-star center in-degree") {
    int n = 19;
    PointSet pts = generate({Distribution::CircleStar, n, 1, 1.0});
    SpannerGraph theta = build_theta(pts, ConeScheme(6));
    int center = n - 1;
    auto in_degree = [&](const SpannerGraph& g) {
        int d = 0;
        for (const DirectedEdge& e : g.edges) {
            if (e.target == center) ++d;
        }
        return d;
    };
    CHECK(in_degree(theta) == n - 1);
    SpannerGraph filtered = reverse_filter(theta);
    CHECK(in_degree(filtered) <= 6);
}

TEST_CASE("reverse_filter agrees with a brute-force reverse scan") {
    PointSet pts = generate({Distribution::Uniform, 20, 9, 10.0});
    ConeScheme scheme(30);
    for (bool yao : {true, false}) {
        SpannerGraph parent = yao ? build_yao(pts, scheme)
                                  : build_theta(pts, scheme);
        SpannerGraph filtered = reverse_filter(parent);

        std::set<std::pair<int, int>> expected;
        for (const Point& p : pts) {
            for (int cone = 0; cone < scheme.k; ++cone) {
                int best = -1;
                double best_primary = 0, best_secondary = 0;
                for (const DirectedEdge& e : parent.edges) {
                    if (e.target != p.id) continue;
                    if (cone_index(scheme, pts[e.target], pts[e.source]) != cone)
                        continue;
                    double back_proj =
                        bisector_projection(scheme, pts[e.target], pts[e.source]);
                    double primary = yao ? e.length : back_proj;
                    double secondary = yao ? back_proj : e.length;
                    if (best < 0 || primary < best_primary ||
                        (primary == best_primary &&
                         secondary < best_secondary) ||
                        (primary == best_primary &&
                         secondary == best_secondary && e.source < best)) {
                        best = e.source;
                        best_primary = primary;
                        best_secondary = secondary;
                    }
                }
                if (best >= 0) expected.insert({best, p.id});
            }
        }
        CHECK(edge_pairs(filtered) == expected);
    }
}

TEST_CASE("filtered graphs are subgraphs with per-class retention") {
    PointSet pts = generate({Distribution::Uniform, 60, 17, 100.0});
    ConeScheme scheme(12);
    SpannerGraph parent = build_theta(pts, scheme);
    SpannerGraph filtered = reverse_filter(parent);
    auto parent_pairs = edge_pairs(parent);
    for (auto pair : edge_pairs(filtered)) {
        CHECK(parent_pairs.count(pair) == 1);
    }
    // every (target, cone) class with incoming edges keeps exactly one
    std::map<std::pair<int, int>, int> parent_classes, filtered_classes;
    for (const DirectedEdge& e : parent.edges) {
        ++parent_classes[{e.target,
                          cone_index(scheme, pts[e.target], pts[e.source])}];
    }
    for (const DirectedEdge& e : filtered.edges) {
        ++filtered_classes[{e.target,
                            cone_index(scheme, pts[e.target], pts[e.source])}];
    }
    for (const auto& [cls, count] : parent_classes) {
        CHECK(filtered_classes[cls] == 1);
    }

    CHECK_THROWS_AS(reverse_filter(filtered), std::invalid_argument);
}

TEST_CASE("half-theta6 keeps one parity class and partitions Theta_6") {
    PointSet pts = generate({Distribution::Uniform, 50, 4, 100.0});
    SpannerGraph theta6 = build_theta(pts, ConeScheme(6));
    SpannerGraph even = build_half_theta6(pts, Parity::Even);
    SpannerGraph odd = build_half_theta6(pts, Parity::Odd);
    for (const DirectedEdge& e : even.edges) CHECK(e.cone % 2 == 0);
    for (const DirectedEdge& e : odd.edges) CHECK(e.cone % 2 == 1);
    CHECK(even.edges.size() + odd.edges.size() == theta6.edges.size());
}

TEST_CASE("construction is deterministic across thread counts") {
    PointSet pts = generate({Distribution::Uniform, 150, 8, 100.0});
    ConeScheme scheme(30);
    SpannerGraph one = build_theta(pts, scheme, 1);
    SpannerGraph four = build_theta(pts, scheme, 4);
    SpannerGraph eight = build_theta(pts, scheme, 8);
    CHECK(one.edges.size() == four.edges.size());
    for (std::size_t i = 0; i < one.edges.size(); ++i) {
        CHECK(one.edges[i] == four.edges[i]);
        CHECK(one.edges[i] == eight.edges[i]);
    }
}

TEST_CASE("edge sets are invariant under translation and scaling") {
    PointSet pts = generate({Distribution::Uniform, 40, 21, 10.0});
    ConeScheme scheme(6);
    auto base = edge_pairs(build_theta(pts, scheme));

    PointSet moved = pts;
    for (Point& p : moved) {
        p.x = p.x * 3.5 + 17.0;
        p.y = p.y * 3.5 - 4.0;
    }
    CHECK(edge_pairs(build_theta(moved, scheme)) == base);
}

TEST_CASE("rotation by the cone angle shifts every cone id by one") {
    PointSet pts = generate({Distribution::Uniform, 30, 33, 10.0});
    ConeScheme scheme(6);
    SpannerGraph base = build_theta(pts, scheme);

    PointSet rotated = pts;
    double c = std::cos(scheme.theta), s = std::sin(scheme.theta);
    for (Point& p : rotated) {
        double x = p.x * c - p.y * s;
        double y = p.x * s + p.y * c;
        p.x = x;
        p.y = y;
    }
    SpannerGraph turned = build_theta(rotated, scheme);
    REQUIRE(turned.edges.size() == base.edges.size());
    std::map<std::pair<int, int>, int> base_cones, turned_cones;
    for (const DirectedEdge& e : base.edges) base_cones[{e.source, e.target}] = e.cone;
    for (const DirectedEdge& e : turned.edges) turned_cones[{e.source, e.target}] = e.cone;
    for (const auto& [pair, cone] : base_cones) {
        REQUIRE(turned_cones.count(pair) == 1);
        CHECK(turned_cones[pair] == (cone + 1) % scheme.k);
    }
}

TEST_CASE("duplicate points are rejected at construction") {
    PointSet dup = {{0, 1, 1}, {1, 1, 1}};
    CHECK_THROWS_AS(build_yao(dup, ConeScheme(6)), std::invalid_argument);
}

TEST_CASE("generators are deterministic and collision-free") {
    PointSet a = generate({Distribution::Uniform, 100, 7, 100.0});
    PointSet b = generate({Distribution::Uniform, 100, 7, 100.0});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].y == b[i].y);
    }

    PointSet star = generate({Distribution::CircleStar, 9, 1, 1.0});
    REQUIRE(star.size() == 9);
    const Point& center = star.back();
    for (std::size_t i = 0; i + 1 < star.size(); ++i) {
        CHECK_THAT(std::hypot(star[i].x - center.x, star[i].y - center.y),
                   Catch::Matchers::WithinRel(1.0, 1e-12));
    }

    PointSet grid = generate({Distribution::Grid, 100, 1, 9.0});
    CHECK(grid.size() == 100);
    CHECK_NOTHROW(validate_point_set(grid));

    CHECK_THROWS_AS(generate({Distribution::Uniform, 0, 1, 1.0}),
                    std::invalid_argument);
}
