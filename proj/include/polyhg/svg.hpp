#pragma once

#include <string>

#include "polyhg/hypergraph.hpp"
#include "polyhg/layout.hpp"

namespace polyhg {

struct SvgStyle {
    double side_length = 1.0;   // L0, sets shape sizes
    double pixels_per_unit = 60.0;
    bool labels = false;
    bool dual = true;           // draw the dual layer beside the primal when present
    double fill_opacity = 0.35;
};

/// Fixed 20-color palette entry for a hyperedge id.
[[nodiscard]] const char* hyperedge_color(Index e);

/// SVG 1.1 document: one filled path per hyperedge (hull, lens for digons,
/// water drop for monogons) and one circle per vertex.
[[nodiscard]] std::string render_svg(const Hypergraph& h, const Layout& layout,
                                     const SvgStyle& style = {});

}  // namespace polyhg
