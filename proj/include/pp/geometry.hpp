#pragma once

#include <vector>

namespace pp {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double k) const { return {x * k, y * k}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const;
};

double distance(const Vec2& a, const Vec2& b);

struct ConvexPolygon {
    std::vector<Vec2> points; // counter-clockwise
};

// Closed-set intersection test by the separating-axis criterion: polygons
// that share only a boundary point count as intersecting.
bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b);

// Andrew monotone chain; result is counter-clockwise.
ConvexPolygon convex_hull(std::vector<Vec2> points);

// Axis-aligned rectangle of the given extents rotated by yaw and centered at
// (x, y).
ConvexPolygon oriented_rectangle(double x, double y, double yaw, double length, double width);

} // namespace pp
