#include "polyhg/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <numbers>

#include "polyhg/planarity.hpp"

namespace polyhg {

namespace {

constexpr int kRoundSides = 16;

std::vector<Vec2> circle(Vec2 c, double r, double phase = 0.0) {
    std::vector<Vec2> out;
    for (int k = 0; k < kRoundSides; ++k) {
        const double th = phase + 2.0 * std::numbers::pi * k / kRoundSides;
        out.push_back(c + Vec2{r * std::cos(th), r * std::sin(th)});
    }
    return out;
}

// Stadium around segment ab: two half-disks of 8 sides each.
std::vector<Vec2> stadium(Vec2 a, Vec2 b, double r) {
    const Vec2 d = b - a;
    const double len = d.norm();
    if (len <= 0) return circle(a, r);
    const double base = std::atan2(d.y, d.x);
    std::vector<Vec2> out;
    const int half = kRoundSides / 2;
    for (int k = 0; k < half; ++k) {
        const double th = base - std::numbers::pi / 2 + std::numbers::pi * k / (half - 1);
        out.push_back(b + Vec2{r * std::cos(th), r * std::sin(th)});
    }
    for (int k = 0; k < half; ++k) {
        const double th = base + std::numbers::pi / 2 + std::numbers::pi * k / (half - 1);
        out.push_back(a + Vec2{r * std::cos(th), r * std::sin(th)});
    }
    return out;
}

// Lens bounded by two arcs of radius |ab|, tips at a and b.
std::vector<Vec2> lens(Vec2 a, Vec2 b, double L0) {
    const Vec2 d = b - a;
    const double r = d.norm();
    if (r < 1e-12 * L0) return circle(a, 0.05 * L0);
    const Vec2 mid = 0.5 * (a + b);
    const Vec2 n = (1.0 / r) * perp(d);
    const double off = 0.5 * std::sqrt(3.0) * r;
    std::vector<Vec2> pts;
    for (double side : {1.0, -1.0}) {
        const Vec2 c = mid - (side * off) * n;
        const double ta = std::atan2(a.y - c.y, a.x - c.x);
        double tb = std::atan2(b.y - c.y, b.x - c.x);
        if (tb - ta > std::numbers::pi) tb -= 2 * std::numbers::pi;
        if (ta - tb > std::numbers::pi) tb += 2 * std::numbers::pi;
        const int steps = kRoundSides / 2;
        for (int k = 0; k <= steps; ++k) {
            const double th = ta + (tb - ta) * k / steps;
            pts.push_back(c + Vec2{r * std::cos(th), r * std::sin(th)});
        }
    }
    return convex_hull(pts);
}

// Water drop with its tip on v and the bulb pointing away from `center`.
std::vector<Vec2> drop(Vec2 v, Vec2 center, double L0) {
    Vec2 dir = v - center;
    const double n = dir.norm();
    dir = n > 1e-12 ? (1.0 / n) * dir : Vec2{0, 1};
    std::vector<Vec2> pts = circle(v + (0.4 * L0) * dir, 0.15 * L0, std::atan2(dir.y, dir.x));
    pts.push_back(v);
    return convex_hull(pts);
}

// Angle of `v` seen from `center`, so round shapes turn with the layout.
double phase_from(Vec2 v, Vec2 center) {
    const Vec2 d = v - center;
    return d.norm2() > 0 ? std::atan2(d.y, d.x) : 0.0;
}

Vec2 vertex_mean(const Hypergraph& h, const std::vector<Vec2>& positions) {
    Vec2 c;
    for (Index v : h.vertices()) c += positions.at(v);
    return h.num_vertices() > 0 ? (1.0 / static_cast<double>(h.num_vertices())) * c : c;
}

std::vector<Vec2> realize(const Hypergraph& h, const std::vector<Vec2>& positions, Index e,
                          double L0, Vec2 center, ShapeConvention shapes) {
    auto members = h.hyperedge_vertices(e);
    std::vector<Vec2> pts;
    for (Index v : members) {
        const Vec2 p = positions.at(v);
        if (!p.finite()) throw std::invalid_argument("non-finite position for v" + std::to_string(v));
        pts.push_back(p);
    }
    const bool drawn = shapes == ShapeConvention::Drawn;
    if (pts.size() == 1) {
        return drawn ? drop(pts[0], center, L0) : circle(pts[0], 0.25 * L0, phase_from(pts[0], center));
    }
    std::vector<Vec2> hull = pts.size() == 2 ? pts : convex_hull(pts);
    if (hull.size() == 2) return drawn ? lens(hull[0], hull[1], L0) : stadium(hull[0], hull[1], 0.1 * L0);
    if (hull.size() == 1) return circle(hull[0], drawn ? 0.05 * L0 : 0.1 * L0, phase_from(hull[0], center));
    return hull;
}

}  // namespace

const char* to_string(ShapeConvention c) {
    return c == ShapeConvention::Capped ? "capped" : "drawn";
}

ShapeConvention shape_convention_from_string(const std::string& s) {
    if (s == "capped") return ShapeConvention::Capped;
    if (s == "drawn") return ShapeConvention::Drawn;
    throw std::invalid_argument("unknown shape convention \"" + s + "\"");
}

std::vector<Vec2> realized_polygon(const Hypergraph& h, const std::vector<Vec2>& positions,
                                   Index e, double L0, ShapeConvention shapes) {
    return realize(h, positions, e, L0, vertex_mean(h, positions), shapes);
}

double intersection_area(const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
    return convex_intersection_area(p, q);
}

OverlapReport overlap_report(const Hypergraph& h, const std::vector<Vec2>& positions, double L0,
                             double epsilon, ShapeConvention shapes) {
    const auto start = std::chrono::steady_clock::now();
    OverlapReport r;
    r.epsilon = epsilon < 0 ? 1e-9 * L0 * L0 : epsilon;
    r.shapes = shapes;
    const std::vector<Index> edges = h.hyperedges();
    const Vec2 center = vertex_mean(h, positions);
    std::vector<std::vector<Vec2>> polys;
    std::vector<std::pair<Vec2, Vec2>> boxes;
    for (Index e : edges) {
        polys.push_back(realize(h, positions, e, L0, center, shapes));
        Vec2 lo = polys.back().front(), hi = lo;
        for (const Vec2& p : polys.back()) {
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
        }
        boxes.emplace_back(lo, hi);
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (boxes[i].second.x < boxes[j].first.x || boxes[j].second.x < boxes[i].first.x ||
                boxes[i].second.y < boxes[j].first.y || boxes[j].second.y < boxes[i].first.y) {
                continue;
            }
            const double a = intersection_area(polys[i], polys[j]);
            if (a <= r.epsilon) continue;
            PairOverlap po{edges[i], edges[j], a};
            po.shared = adjacency(h, ElementId::hyperedge(edges[i]), ElementId::hyperedge(edges[j]));
            po.unavoidable = po.shared >= 3;
            r.unavoidable_count += po.unavoidable;
            r.total_area += a;
            r.pairs.push_back(po);
        }
    }
    r.pair_count = r.pairs.size();
    try {
        r.forbidden_count = static_cast<std::int64_t>(forbidden_count(h));
    } catch (const PlanarityIndeterminate&) {
        r.forbidden_count = -1;
    }
    r.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace polyhg
