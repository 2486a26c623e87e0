#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace polyhg {

struct Vec2 {
    double x = 0;
    double y = 0;

    constexpr Vec2& operator+=(Vec2 o) noexcept {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Vec2& operator-=(Vec2 o) noexcept {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    constexpr Vec2& operator*=(double s) noexcept {
        x *= s;
        y *= s;
        return *this;
    }
    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) noexcept { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) noexcept { return {s * a.x, s * a.y}; }
    constexpr bool operator==(const Vec2&) const = default;

    [[nodiscard]] double norm() const noexcept { return std::hypot(x, y); }
    [[nodiscard]] constexpr double norm2() const noexcept { return x * x + y * y; }
    [[nodiscard]] bool finite() const noexcept { return std::isfinite(x) && std::isfinite(y); }
};

[[nodiscard]] constexpr double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
[[nodiscard]] constexpr double cross(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }
/// Counter-clockwise quarter turn.
[[nodiscard]] constexpr Vec2 perp(Vec2 a) noexcept { return {-a.y, a.x}; }

[[nodiscard]] Vec2 mean(std::span<const Vec2> pts);

/// Shoelace area; positive for counter-clockwise order.
[[nodiscard]] double signed_area(std::span<const Vec2> pts);

/// Convex hull, counter-clockwise, without collinear points.
[[nodiscard]] std::vector<Vec2> convex_hull(std::span<const Vec2> pts);

/// Strict or weak convexity with counter-clockwise orientation, up to `tol`.
[[nodiscard]] bool is_convex_ccw(std::span<const Vec2> poly, double tol = 1e-12);

/// Area of the intersection of two counter-clockwise convex polygons.
/// Throws std::invalid_argument if either input is not convex.
[[nodiscard]] double convex_intersection_area(std::span<const Vec2> p, std::span<const Vec2> q);

/// Clips convex `subject` by the half-planes of counter-clockwise convex `clip`.
[[nodiscard]] std::vector<Vec2> clip_convex(std::span<const Vec2> subject,
                                            std::span<const Vec2> clip);

/// Point order by angle about `center`, ties by `tie` key (e.g. ids).
[[nodiscard]] std::vector<std::size_t> angular_order(std::span<const Vec2> pts, Vec2 center,
                                                     std::span<const std::size_t> tie);

}  // namespace polyhg
