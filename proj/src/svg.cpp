#include "polyhg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "polyhg/metrics.hpp"

namespace polyhg {

namespace {

constexpr const char* kPalette[20] = {
    "#1f77b4", "#aec7e8", "#ff7f0e", "#ffbb78", "#2ca02c", "#98df8a", "#d62728",
    "#ff9896", "#9467bd", "#c5b0d5", "#8c564b", "#c49c94", "#e377c2", "#f7b6d2",
    "#7f7f7f", "#c7c7c7", "#bcbd22", "#dbdb8d", "#17becf", "#9edae5"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Box {
    Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    void add(Vec2 p, double pad = 0) {
        lo = {std::min(lo.x, p.x - pad), std::min(lo.y, p.y - pad)};
        hi = {std::max(hi.x, p.x + pad), std::max(hi.y, p.y + pad)};
    }
    [[nodiscard]] bool empty() const { return !(lo.x <= hi.x); }
};

class Writer {
public:
    Writer(double scale, Vec2 offset) : scale_(scale), offset_(offset) {}

    // Layout y points up; SVG y points down.
    [[nodiscard]] std::string pt(Vec2 p) const {
        return num((p.x + offset_.x) * scale_) + "," + num(-(p.y + offset_.y) * scale_);
    }
    [[nodiscard]] std::string len(double d) const { return num(d * scale_); }

private:
    double scale_;
    Vec2 offset_;
};

Vec2 drop_direction(Vec2 v, Vec2 center) {
    const Vec2 d = v - center;
    const double n = d.norm();
    return n > 1e-12 ? (1.0 / n) * d : Vec2{0, 1};
}

std::string polygon_path(const Writer& w, const std::vector<Vec2>& hull) {
    std::string d = "M" + w.pt(hull[0]);
    for (std::size_t i = 1; i < hull.size(); ++i) d += " L" + w.pt(hull[i]);
    return d + " Z";
}

std::string lens_path(const Writer& w, Vec2 a, Vec2 b, double L0) {
    double r = (b - a).norm();
    if (r < 1e-12) r = 0.1 * L0;
    return "M" + w.pt(a) + " A" + w.len(r) + "," + w.len(r) + " 0 0 1 " + w.pt(b) + " A" +
           w.len(r) + "," + w.len(r) + " 0 0 1 " + w.pt(a) + " Z";
}

// Tip on the vertex, bulb pointing away from `center`.
std::string drop_path(const Writer& w, Vec2 v, Vec2 center, double L0) {
    const Vec2 dir = drop_direction(v, center);
    const Vec2 tip = v;
    const double r = 0.15 * L0;
    const Vec2 c = tip + (0.4 * L0) * dir;
    const Vec2 to_tip = tip - c;
    const double base = std::atan2(to_tip.y, to_tip.x);
    const double spread = std::acos(r / to_tip.norm());
    const Vec2 t1 = c + Vec2{r * std::cos(base + spread), r * std::sin(base + spread)};
    const Vec2 t2 = c + Vec2{r * std::cos(base - spread), r * std::sin(base - spread)};
    return "M" + w.pt(tip) + " L" + w.pt(t1) + " A" + w.len(r) + "," + w.len(r) + " 0 1 1 " +
           w.pt(t2) + " Z";
}

Box panel_box(const Hypergraph& h, const std::vector<Vec2>& pos, double L0) {
    Box b;
    for (Index v : h.vertices()) b.add(pos[v], 0.6 * L0);
    return b;
}

void draw_panel(std::string& out, const Hypergraph& h, const std::vector<Vec2>& pos,
                const Writer& w, const SvgStyle& style, const std::string& vertex_prefix,
                const std::string& edge_prefix) {
    const double L0 = style.side_length;
    Vec2 center;
    for (Index v : h.vertices()) center += pos[v];
    if (h.num_vertices() > 0) center *= 1.0 / static_cast<double>(h.num_vertices());

    out += "<g>\n";
    for (Index e : h.hyperedges()) {
        auto members = h.hyperedge_vertices(e);
        std::string d;
        if (members.size() == 1) {
            d = drop_path(w, pos[members[0]], center, L0);
        } else if (members.size() == 2) {
            d = lens_path(w, pos[members[0]], pos[members[1]], L0);
        } else {
            std::vector<Vec2> pts;
            for (Index v : members) pts.push_back(pos[v]);
            const auto hull = convex_hull(pts);
            d = hull.size() >= 3 ? polygon_path(w, hull) : lens_path(w, hull.front(), hull.back(), L0);
        }
        const char* color = hyperedge_color(e);
        out += "<path id=\"";
        out += edge_prefix;
        out += std::to_string(e) + "\" d=\"" + d + "\" fill=\"" + color + "\" fill-opacity=\"" +
               num(style.fill_opacity) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    }
    for (Index v : h.vertices()) {
        const std::string p = w.pt(pos[v]);
        const auto comma = p.find(',');
        out += "<circle id=\"";
        out += vertex_prefix;
        out += std::to_string(v) + "\" cx=\"" + p.substr(0, comma) + "\" cy=\"" +
               p.substr(comma + 1) + "\" r=\"3\" fill=\"#222222\"/>\n";
        if (style.labels) {
            const std::string& label = h.label(ElementId::vertex(v));
            std::string text;
            for (char c : label.empty() ? vertex_prefix + std::to_string(v) : label) {
                if (c == '<') text += "&lt;";
                else if (c == '>') text += "&gt;";
                else if (c == '&') text += "&amp;";
                else text += c;
            }
            out += "<text x=\"" + p.substr(0, comma) + "\" y=\"" + p.substr(comma + 1) +
                   "\" dx=\"4\" dy=\"-4\" font-size=\"10\" font-family=\"sans-serif\">" + text +
                   "</text>\n";
        }
    }
    out += "</g>\n";
}

}  // namespace

const char* hyperedge_color(Index e) {
    std::uint64_t x = static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    x ^= x >> 31;
    return kPalette[x % 20];
}

std::string render_svg(const Hypergraph& h, const Layout& layout, const SvgStyle& style) {
    if (!layout.covers(h)) throw LayoutError("layout does not cover the hypergraph");
    const double L0 = style.side_length;
    const bool with_dual = style.dual && layout.dual_positions.has_value();

    Box primal = panel_box(h, layout.positions, L0);
    if (primal.empty()) primal.add({0, 0}, L0);
    Hypergraph dual_h;
    Box dual_box;
    Vec2 dual_shift;
    if (with_dual) {
        dual_h = h.dual();
        dual_box = panel_box(dual_h, *layout.dual_positions, L0);
        if (dual_box.empty()) dual_box.add({0, 0}, L0);
        const double gap = 0.1 * (primal.hi.x - primal.lo.x);
        dual_shift = {primal.hi.x + gap - dual_box.lo.x, 0};
    }
    Box all = primal;
    if (with_dual) {
        all.add(dual_box.lo + dual_shift);
        all.add(dual_box.hi + dual_shift);
    }
    const double width = all.hi.x - all.lo.x;
    const double height = all.hi.y - all.lo.y;
    const double mx = 0.05 * width;
    const double my = 0.05 * height;
    const double s = style.pixels_per_unit;

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num((width + 2 * mx) * s) + "\" height=\"" + num((height + 2 * my) * s) +
           "\" viewBox=\"" + num((all.lo.x - mx) * s) + " " + num(-(all.hi.y + my) * s) + " " +
           num((width + 2 * mx) * s) + " " + num((height + 2 * my) * s) + "\">\n";
    out += "<rect x=\"" + num((all.lo.x - mx) * s) + "\" y=\"" + num(-(all.hi.y + my) * s) +
           "\" width=\"" + num((width + 2 * mx) * s) + "\" height=\"" +
           num((height + 2 * my) * s) + "\" fill=\"#ffffff\"/>\n";
    draw_panel(out, h, layout.positions, Writer(s, {0, 0}), style, "v", "e");
    if (with_dual) draw_panel(out, dual_h, *layout.dual_positions, Writer(s, dual_shift), style, "de", "dv");
    out += "</svg>\n";
    return out;
}

}  // namespace polyhg
