#include "polyhg/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyhg {

Vec2 mean(std::span<const Vec2> pts) {
    Vec2 c;
    for (const Vec2& p : pts) c += p;
    if (!pts.empty()) c *= 1.0 / static_cast<double>(pts.size());
    return c;
}

double signed_area(std::span<const Vec2> pts) {
    const std::size_t n = pts.size();
    if (n < 3) return 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) a += cross(pts[i], pts[(i + 1) % n]);
    return 0.5 * a;
}

std::vector<Vec2> convex_hull(std::span<const Vec2> pts) {
    std::vector<Vec2> p(pts.begin(), pts.end());
    std::sort(p.begin(), p.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) return p;

    std::vector<Vec2> hull(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, lo = k + 1; i > 0; --i) {
        while (k >= lo && cross(hull[k - 1] - hull[k - 2], p[i - 1] - hull[k - 2]) <= 0) --k;
        hull[k++] = p[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

bool is_convex_ccw(std::span<const Vec2> poly, double tol) {
    const std::size_t n = poly.size();
    if (n < 3) return true;
    double scale = 0.0;
    for (const Vec2& p : poly) scale = std::max(scale, p.norm2());
    const double eps = tol * std::max(scale, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        const Vec2 c = poly[(i + 2) % n];
        if (cross(b - a, c - b) < -eps) return false;
    }
    return signed_area(poly) >= -eps;
}

std::vector<Vec2> clip_convex(std::span<const Vec2> subject, std::span<const Vec2> clip) {
    std::vector<Vec2> out(subject.begin(), subject.end());
    const std::size_t m = clip.size();
    for (std::size_t i = 0; i < m && !out.empty(); ++i) {
        const Vec2 a = clip[i];
        const Vec2 b = clip[(i + 1) % m];
        const Vec2 edge = b - a;
        std::vector<Vec2> in = std::move(out);
        out.clear();
        const std::size_t n = in.size();
        for (std::size_t j = 0; j < n; ++j) {
            const Vec2 p = in[j];
            const Vec2 q = in[(j + 1) % n];
            const double sp = cross(edge, p - a);
            const double sq = cross(edge, q - a);
            if (sp >= 0) out.push_back(p);
            if ((sp >= 0) != (sq >= 0)) {
                const double t = sp / (sp - sq);
                out.push_back(p + t * (q - p));
            }
        }
    }
    return out;
}

double convex_intersection_area(std::span<const Vec2> p, std::span<const Vec2> q) {
    if (!is_convex_ccw(p) || !is_convex_ccw(q)) {
        throw std::invalid_argument("convex_intersection_area requires convex CCW polygons");
    }
    if (p.size() < 3 || q.size() < 3) return 0.0;
    return std::max(0.0, signed_area(clip_convex(p, q)));
}

std::vector<std::size_t> angular_order(std::span<const Vec2> pts, Vec2 center,
                                       std::span<const std::size_t> tie) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<double> angle(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2 d = pts[i] - center;
        angle[i] = std::atan2(d.y, d.x);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (angle[a] != angle[b]) return angle[a] < angle[b];
        return tie[a] < tie[b];
    });
    return idx;
}

}  // namespace polyhg
