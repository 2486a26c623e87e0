#include "doctest.h"
#include "support.hpp"

#include "polyhg/metrics.hpp"
#include "polyhg/planarity.hpp"

using namespace polyhg;

namespace {

std::vector<Vec2> square(Vec2 o, double s) { return {o, {o.x + s, o.y}, {o.x + s, o.y + s}, {o.x, o.y + s}}; }

std::vector<Vec2> transformed(const std::vector<Vec2>& p, double angle, Vec2 shift) {
    std::vector<Vec2> out;
    const double c = std::cos(angle), s = std::sin(angle);
    for (Vec2 v : p) {
        if (!v.finite()) {
            out.push_back(v);
            continue;
        }
        out.push_back({c * v.x - s * v.y + shift.x, s * v.x + c * v.y + shift.y});
    }
    return out;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("hull of a convex triangle and of a point set with an interior point") {
    const std::vector<Vec2> t{{0, 0}, {1, 0}, {0, 1}};
    CHECK(convex_hull(t) == t);
    const std::vector<Vec2> q{{0, 0}, {2, 0}, {0.3, 0.3}, {0, 2}};
    CHECK(convex_hull(q).size() == 3);
    const std::vector<Vec2> line{{0, 0}, {1, 1}, {2, 2}};
    CHECK(convex_hull(line).size() == 2);
}

TEST_CASE("signed area, mean and convexity") {
    const auto s = square({0, 0}, 2);
    CHECK(signed_area(s) == doctest::Approx(4));
    std::vector<Vec2> cw(s.rbegin(), s.rend());
    CHECK(signed_area(cw) == doctest::Approx(-4));
    CHECK(mean(s) == Vec2{1, 1});
    CHECK(is_convex_ccw(s));
    CHECK_FALSE(is_convex_ccw(cw));
    const std::vector<Vec2> dart{{0, 0}, {2, 0}, {1, 0.5}, {1, 2}};
    CHECK_FALSE(is_convex_ccw(dart));
}

TEST_CASE("intersection of offset unit squares") {
    CHECK(convex_intersection_area(square({0, 0}, 1), square({0.5, 0}, 1)) == doctest::Approx(0.5));
    CHECK(convex_intersection_area(square({0, 0}, 1), square({3, 0}, 1)) == 0.0);
    const std::vector<Vec2> dart{{0, 0}, {2, 0}, {1, 0.5}, {1, 2}};
    CHECK_THROWS_AS((void)convex_intersection_area(dart, square({0, 0}, 1)), std::invalid_argument);
}

TEST_CASE("intersection area is symmetric, idempotent and agrees with Monte Carlo") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int i = 0; i < 20; ++i) {
        const auto p = oracle::random_convex(rng, {0, 0}, 1.0);
        const auto q = oracle::random_convex(rng, {u(rng), u(rng)}, 1.0);
        const double a = convex_intersection_area(p, q);
        CHECK(a == doctest::Approx(convex_intersection_area(q, p)).epsilon(1e-12));
        CHECK(convex_intersection_area(p, p) == doctest::Approx(signed_area(p)).epsilon(1e-12));
        const double mc = oracle::monte_carlo_overlap(p, q, 1'000'000, rng);
        CHECK(std::abs(a - mc) <= 0.02 * std::max(a, 0.05));
    }
}

TEST_CASE("angular order breaks ties by key") {
    const std::vector<Vec2> pts{{1, 0}, {0, 1}, {-1, 0}, {1, 0}};
    const std::vector<std::size_t> tie{3, 2, 1, 0};
    const auto o = angular_order(pts, {0, 0}, tie);
    REQUIRE(o.size() == 4);
    CHECK(o[0] == 3);
    CHECK(o[1] == 0);
}

}

TEST_SUITE("metrics") {

TEST_CASE("realized polygons") {
    const Hypergraph h = oracle::from_lists(5, {{0}, {1, 2}, {2, 3, 4}});
    const std::vector<Vec2> pos{{0, 0}, {2, 0}, {3, 0}, {4, 1}, {3.5, 0.2}};
    const auto mono = realized_polygon(h, pos, 0);
    CHECK(mono.size() == 16);
    for (Vec2 v : mono) CHECK(v.norm() == doctest::Approx(0.25));
    const auto dig = realized_polygon(h, pos, 1);
    CHECK(is_convex_ccw(dig));
    CHECK(signed_area(dig) == doctest::Approx(0.2 * 1.0 + M_PI * 0.01).epsilon(0.02));
    const auto tri = realized_polygon(h, pos, 2);
    CHECK(tri.size() == 3);
    const auto mono2 = realized_polygon(h, pos, 0, 2.0);
    CHECK(mono2[0].norm() == doctest::Approx(0.5));
    const auto drawn = realized_polygon(h, pos, 1, 1.0, ShapeConvention::Drawn);
    CHECK(is_convex_ccw(drawn));
}

TEST_CASE("shape convention names") {
    CHECK(std::string(to_string(ShapeConvention::Drawn)) == "drawn");
    CHECK(shape_convention_from_string("capped") == ShapeConvention::Capped);
    CHECK_THROWS_AS((void)shape_convention_from_string("round"), std::invalid_argument);
}

TEST_CASE("disjoint triangles report nothing") {
    const Hypergraph h = oracle::from_lists(6, {{0, 1, 2}, {3, 4, 5}});
    const std::vector<Vec2> pos{{0, 0}, {1, 0}, {0, 1}, {5, 0}, {6, 0}, {5, 1}};
    const OverlapReport r = overlap_report(h, pos);
    CHECK(r.pair_count == 0);
    CHECK(r.total_area == 0);
    CHECK(r.forbidden_count == 0);
}

TEST_CASE("shared-vertex contact is not overlap") {
    const Hypergraph h = oracle::from_lists(5, {{0, 1, 2}, {0, 3, 4}});
    const std::vector<Vec2> pos{{0, 0}, {1, 0}, {0.5, 0.8}, {-1, 0}, {-0.5, -0.8}};
    CHECK(overlap_report(h, pos).pair_count == 0);
}

TEST_CASE("forced overlap of a three-adjacent pair") {
    const Hypergraph h = oracle::three_adjacent_pair();
    const std::vector<Vec2> pos{{0, 0}, {2, 0}, {1, 1.5}, {1, -1}};
    const OverlapReport r = overlap_report(h, pos);
    CHECK(r.pair_count == 1);
    CHECK(r.unavoidable_count == 1);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].shared == 3);
    CHECK(r.pairs[0].unavoidable);
    CHECK(r.total_area >= 1.5 - 1e-6);
    CHECK(r.forbidden_count == 1);
}

TEST_CASE("report equals a brute-force pass and is invariant under rigid motion") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 30; ++i) {
        const Hypergraph h = oracle::random_small(rng, 20, 6);
        const Layout l = initialize(h, rng(), EnergyConfig{}, false);
        const OverlapReport r = overlap_report(h, l.positions);
        std::size_t count = 0;
        double total = 0;
        const auto es = h.hyperedges();
        for (std::size_t a = 0; a < es.size(); ++a) {
            for (std::size_t b = a + 1; b < es.size(); ++b) {
                const double x = convex_intersection_area(realized_polygon(h, l.positions, es[a]),
                                                          realized_polygon(h, l.positions, es[b]));
                if (x > r.epsilon) {
                    ++count;
                    total += x;
                }
            }
        }
        CHECK(r.pair_count == count);
        CHECK(r.total_area == doctest::Approx(total).epsilon(1e-12));
        const OverlapReport m = overlap_report(h, transformed(l.positions, 0.7, {13, -4}));
        CHECK(m.pair_count == r.pair_count);
        CHECK(m.total_area == doctest::Approx(r.total_area).epsilon(1e-8));
    }
}

TEST_CASE("explicit epsilon") {
    const Hypergraph h = oracle::from_lists(6, {{0, 1, 2}, {3, 4, 5}});
    const std::vector<Vec2> pos{{0, 0}, {1, 0}, {0, 1}, {0.9, 0}, {2, 0}, {0.9, 1}};
    const OverlapReport tight = overlap_report(h, pos);
    CHECK(tight.pair_count == 1);
    CHECK(overlap_report(h, pos, 1.0, 1.0).pair_count == 0);
}

}
