#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyhg/geometry.hpp"
#include "polyhg/hypergraph.hpp"

namespace polyhg {

/// Region measured for digons and monogons.
enum class ShapeConvention {
    /// Digon: strip of half-width 0.1*L0 with round caps. Monogon: disk of
    /// radius L0/4 about the vertex. Both as 16-gons.
    Capped,
    /// The shapes the SVG renderer draws. Digon: lens of two arcs of radius
    /// |ab|. Monogon: drop with its tip on the vertex and a bulb of radius
    /// 0.15*L0 centred 0.4*L0 away from the mean vertex position.
    Drawn,
};

[[nodiscard]] const char* to_string(ShapeConvention c);
[[nodiscard]] ShapeConvention shape_convention_from_string(const std::string& s);

/// Convex counter-clockwise region of hyperedge `e`: the hull of its members
/// for three or more non-collinear points, otherwise the digon or monogon
/// shape of `shapes`.
[[nodiscard]] std::vector<Vec2> realized_polygon(const Hypergraph& h,
                                                 const std::vector<Vec2>& positions, Index e,
                                                 double L0 = 1.0,
                                                 ShapeConvention shapes = ShapeConvention::Capped);

/// Area of P ∩ Q for convex counter-clockwise polygons; throws on non-convex input.
[[nodiscard]] double intersection_area(const std::vector<Vec2>& p, const std::vector<Vec2>& q);

struct PairOverlap {
    Index e = 0;
    Index f = 0;
    double area = 0;
    std::size_t shared = 0;     // common vertices
    bool unavoidable = false;   // the pair shares three or more vertices
};

struct OverlapReport {
    std::size_t pair_count = 0;
    double total_area = 0;
    std::vector<PairOverlap> pairs;  // pairs above epsilon, ascending (e, f)
    std::size_t unavoidable_count = 0;
    std::int64_t forbidden_count = 0;  // -1 when the search budget ran out
    double epsilon = 0;
    ShapeConvention shapes = ShapeConvention::Capped;
    double runtime_seconds = 0;
};

/// Counts unordered hyperedge pairs whose realized polygons intersect in
/// more than `epsilon` (default 1e-9*L0^2 when negative).
[[nodiscard]] OverlapReport overlap_report(const Hypergraph& h, const std::vector<Vec2>& positions,
                                           double L0 = 1.0, double epsilon = -1.0,
                                           ShapeConvention shapes = ShapeConvention::Capped);

}  // namespace polyhg
